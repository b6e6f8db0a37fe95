#include <gtest/gtest.h>

#include "icdual/error.hpp"
#include "icdual/formats.hpp"
#include "icdual/index_code.hpp"
#include "icdual/packing.hpp"
#include "icdual/random_codes.hpp"
#include "oracles.hpp"

using namespace icdual;
using gf2::BitMatrix;
using gf2::BitVector;

namespace {

SideInfoDigraph fixture(const char* name) { return formats::parse_graph(oracle::read_fixture(name)); }

IndexCode code_of(std::size_t n, std::size_t p, std::vector<std::string> rows) {
  return IndexCode(n, p, BitMatrix::from_strings(n * p, rows));
}

// User u decodes slot j iff e_{u,j} lies in rowspace(G) + span{e_c : c in side columns}.
bool decodable_exhaustive(const IndexCode& code, const SideInfoDigraph& g, std::size_t u, std::size_t j) {
  auto gens = oracle::to_ints(code.generator());
  const std::size_t width = code.n() * code.p();
  for (auto a : g.side_info(u)) {
    for (std::size_t b = 0; b < code.p(); ++b) {
      std::vector<int> e(width, 0);
      e[a * code.p() + b] = 1;
      gens.push_back(e);
    }
  }
  std::vector<int> target(width, 0);
  target[u * code.p() + j] = 1;
  return oracle::in_span_exhaustive(gens, target);
}

}  // namespace

TEST(IndexCode, ConstructorChecks) {
  EXPECT_THROW(code_of(3, 1, {"11"}), std::invalid_argument);
  EXPECT_THROW(code_of(3, 1, {"110", "110"}), InvalidInput);
  EXPECT_THROW(IndexCode(3, 0, BitMatrix(0, 0)), InvalidInput);
  const auto c = code_of(3, 1, {"110", "011"});
  EXPECT_EQ(c.broadcast_rate(), Rational(2));
  EXPECT_EQ(c.complementary_rate(), Rational(1));
}

TEST(IndexCode, FrozenVerdicts) {
  const auto k3 = fixture("k3_bidirected.json");
  const auto c3 = fixture("c3_directed.json");
  const auto allones = code_of(3, 1, {"111"});
  EXPECT_TRUE(validate_index_code(allones, k3).valid);
  const auto v = validate_index_code(allones, c3);
  EXPECT_FALSE(v.valid);
  EXPECT_EQ(v.first_failure, (std::pair<std::size_t, std::size_t>{0, 0}));
  EXPECT_TRUE(validate_index_code(code_of(3, 1, {"110", "011"}), c3).valid);
  EXPECT_TRUE(validate_index_code(code_of(3, 1, {"100", "010", "001"}), fixture("edgeless3.json")).valid);
  EXPECT_FALSE(validate_index_code(code_of(3, 1, {"110", "011"}), fixture("edgeless3.json")).valid);
  EXPECT_THROW((void)validate_index_code(allones, fixture("k4_bidirected.json")), DimensionMismatch);
}

TEST(IndexCode, VerdictMatchesExhaustiveDecoding) {
  random::Engine rng(61);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 4, p = 1 + rng() % 2;
    const auto g = random::digraph(n, 0.5, rng);
    const std::size_t k = rng() % (n * p + 1);
    const IndexCode code(n, p, random::full_rank_matrix(k, n * p, rng));
    const auto verdict = validate_index_code(code, g);
    std::optional<std::pair<std::size_t, std::size_t>> first;
    for (std::size_t u = 0; u < n && !first; ++u)
      for (std::size_t j = 0; j < p && !first; ++j)
        if (!decodable_exhaustive(code, g, u, j)) first = {u, j};
    ASSERT_EQ(verdict.valid, !first.has_value());
    ASSERT_EQ(verdict.first_failure, first);
  }
}

TEST(IndexCode, WitnessesDecodeMessages) {
  random::Engine rng(71);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 2 + rng() % 4, p = 1 + rng() % 3;
    const auto g = random::digraph(n, 0.5, rng);
    const auto code = random::valid_index_code(g, p, rng);
    const auto verdict = validate_index_code(code, g);
    ASSERT_TRUE(verdict.valid);
    ASSERT_EQ(verdict.witnesses.size(), n * p);
    for (int m = 0; m < 10; ++m) {
      const auto x = random::bits(n * p, rng);
      const auto y = code.encode(x);
      for (const auto& w : verdict.witnesses) {
        for (auto c : w.side_columns) {
          const auto& s = g.side_info(w.user);
          ASSERT_TRUE(std::count(s.begin(), s.end(), c / p));
        }
        ASSERT_EQ(apply_witness(w, y, x), x.get(subsymbol_column(w.user, w.slot, p)));
      }
    }
  }
}

TEST(ConstructFromPacking, SavingsEqualPackingValue) {
  random::Engine rng(81);
  for (int trial = 0; trial < 100; ++trial) {
    const auto g = random::digraph(1 + rng() % 6, 0.4, rng);
    const auto packing = fractional_cycle_packing(g).packing;
    const auto code = construct_from_packing(packing, g);
    ASSERT_TRUE(validate_index_code(code, g).valid);
    ASSERT_EQ(code.complementary_rate(), packing.value);
  }
  const auto k3 = fixture("k3_bidirected.json");
  const auto code = construct_from_packing(fractional_cycle_packing(k3).packing, k3);
  EXPECT_EQ(code.p(), 2u);
  EXPECT_EQ(code.k(), 3u);
}

TEST(ConstructFromPacking, RejectsInfeasiblePacking) {
  const auto k3 = fixture("k3_bidirected.json");
  CyclePacking bad{3, {{{0, 1}, Rational(1)}, {{1, 2}, Rational(1)}}, Rational(2)};
  EXPECT_THROW((void)construct_from_packing(bad, k3), InvalidInput);
}

TEST(Minrank, FrozenOracleValues) {
  EXPECT_EQ(minrank_bruteforce(fixture("k3_bidirected.json")), 1u);
  EXPECT_EQ(minrank_bruteforce(fixture("c3_directed.json")), 2u);
  EXPECT_EQ(minrank_bruteforce(fixture("c5_bidirected.json")), 3u);
  EXPECT_EQ(minrank_bruteforce(fixture("k4_bidirected.json")), 1u);
  EXPECT_EQ(minrank_bruteforce(fixture("edgeless3.json")), 3u);
  EXPECT_THROW((void)minrank_bruteforce(fixture("k4_bidirected.json"), 11), SizeLimitExceeded);
}

TEST(Minrank, MatchesFittingMatrixEnumeration) {
  random::Engine rng(91);
  for (int trial = 0; trial < 150; ++trial) {
    const auto g = random::digraph(1 + rng() % 5, 0.4, rng);
    if (g.edge_count() > 14) continue;
    const auto expected = oracle::minrank(g);
    ASSERT_EQ(minrank_bruteforce(g), expected);
    if (g.n() <= 4) ASSERT_EQ(optimal_scalar_dim_subspace_search(g), expected);
  }
}
