#include <gtest/gtest.h>

#include <cmath>

#include "icdual/error.hpp"
#include "icdual/formats.hpp"
#include "icdual/multiunicast.hpp"
#include "icdual/random_codes.hpp"
#include "oracles.hpp"

using namespace icdual;
using gf2::BitMatrix;

namespace {

Network fixture(const char* name) { return formats::parse_network(oracle::read_fixture(name)); }

const char* kParallel = R"({
  "nodes": ["s1", "s2", "d1", "d2"],
  "links": [
    {"id": "f1", "tail": null, "head": "s1"},
    {"id": "f2", "tail": null, "head": "s2"},
    {"id": "e1", "tail": "s1", "head": "d1"},
    {"id": "e2", "tail": "s2", "head": "d2"}
  ],
  "sources": [
    {"node": "s1", "destination": "d1", "source_links": ["f1"]},
    {"node": "s2", "destination": "d2", "source_links": ["f2"]}
  ]
})";

NetworkCode code_for(const Network& net, std::size_t p, std::vector<std::string> rows) {
  std::vector<std::string> ids;
  for (const auto& l : net.links()) ids.push_back(l.id);
  return NetworkCode(ids, p, BitMatrix::from_strings(net.link_count() * p, rows));
}

}  // namespace

TEST(Network, ConstructionRejectsDanglingReferences) {
  EXPECT_THROW(Network({"s"}, {{"e", std::nullopt, "t"}}, {}), InvalidInput);
  EXPECT_THROW(Network({"s", "s"}, {}, {}), InvalidInput);
  EXPECT_THROW(Network({"s"}, {{"e", std::nullopt, "s"}, {"e", std::nullopt, "s"}}, {}), InvalidInput);
  EXPECT_THROW(Network({"s", "d"}, {{"e", std::nullopt, "s"}}, {{"s", "d", {"x"}}}), InvalidInput);
  EXPECT_THROW(Network({"s", "d"}, {{"e", std::nullopt, "s"}}, {{"s", "d", {"e"}}, {"s", "d", {"e"}}}), InvalidInput);
}

TEST(Network, ValidationFrozenVerdicts) {
  const auto butterfly = validate_network(fixture("butterfly.json"));
  EXPECT_TRUE(butterfly.valid);
  EXPECT_EQ(butterfly.mincuts, (std::vector<std::size_t>{1, 1}));
  EXPECT_TRUE(validate_network(fixture("two_unicast.json")).valid);
  EXPECT_EQ(validate_network(fixture("two_unicast.json")).mincuts, (std::vector<std::size_t>{2, 2}));
  EXPECT_TRUE(validate_network(fixture("single_link.json")).valid);
  EXPECT_TRUE(validate_network(fixture("no_path.json")).valid);
  const auto extra = validate_network(fixture("butterfly_extra_source.json"));
  EXPECT_FALSE(extra.valid);
  EXPECT_EQ(extra.problems.size(), 1u);
}

TEST(Network, ValidationCatchesStructuralProblems) {
  // Cycle among regular links.
  const Network cyclic({"s", "a", "d"},
                       {{"f", std::nullopt, "s"}, {"e1", "s", "a"}, {"e2", "a", "s"}, {"e3", "a", "d"}},
                       {{"s", "d", {"f"}}});
  EXPECT_FALSE(validate_network(cyclic).valid);
  // Tail-less link outside any session.
  const Network orphan({"s", "d"}, {{"f", std::nullopt, "s"}, {"g", std::nullopt, "d"}, {"e", "s", "d"}},
                       {{"s", "d", {"f"}}});
  EXPECT_FALSE(validate_network(orphan).valid);
  // Source link entering the wrong node.
  const Network wrong({"s", "d"}, {{"f", std::nullopt, "d"}, {"e", "s", "d"}}, {{"s", "d", {"f"}}});
  EXPECT_FALSE(validate_network(wrong).valid);
  // Repeated (source, destination) pair.
  const Network repeated({"s", "d"}, {{"f", std::nullopt, "s"}, {"g", std::nullopt, "s"}, {"e1", "s", "d"}, {"e2", "s", "d"}},
                         {{"s", "d", {"f"}}, {"s", "d", {"g"}}});
  EXPECT_FALSE(validate_network(repeated).valid);
}

TEST(RecoverabilityGraph, ButterflyAdjacency) {
  const auto g = build_recoverability_graph(fixture("butterfly.json"));
  // Vertices follow link order f1 f2 e1 e2 e3 e4 e5 e6 e7.
  const std::vector<std::vector<Vertex>> expected{{5, 8}, {6, 7}, {0}, {1}, {2, 3}, {4}, {4}, {0}, {1}};
  EXPECT_EQ(g.side_info_sets(), expected);
}

TEST(RecoverabilityGraph, AcyclicWithoutSources) {
  const auto g = build_recoverability_graph(fixture("no_path.json"));
  EXPECT_EQ(g.edge_count(), 0u);
  const auto report = compute_bound(fixture("no_path.json"));
  EXPECT_EQ(report.r, Rational(0));
  EXPECT_EQ(report.certified_upper, Rational(0));
}

TEST(NetworkCode, ButterflyXorIsValid) {
  const auto net = fixture("butterfly.json");
  const auto code = formats::to_network_code(formats::parse_code(oracle::read_fixture("butterfly_xor.json")));
  const auto verdict = validate_network_code(net, code, CodeKind::multiple_unicast);
  EXPECT_TRUE(verdict.valid);
  EXPECT_EQ(code.rate(), Rational(2));
  EXPECT_EQ(verdict.source_entropies, (std::vector<std::size_t>{1, 1}));
  EXPECT_EQ(verdict.witnesses.size(), 9u);
}

TEST(NetworkCode, IndependenceSeparatesCorrelatedFromUnicast) {
  const auto net = formats::parse_network(kParallel);
  const auto same = code_for(net, 1, {"1111"});
  EXPECT_TRUE(validate_network_code(net, same, CodeKind::correlated).valid);
  const auto mu = validate_network_code(net, same, CodeKind::multiple_unicast);
  EXPECT_FALSE(mu.valid);
  EXPECT_EQ(mu.failure->condition, Condition::independence);
  EXPECT_EQ(mu.failure->sessions, (std::pair<std::size_t, std::size_t>{0, 1}));
  EXPECT_TRUE(validate_network_code(net, code_for(net, 1, {"1010", "0101"}), CodeKind::multiple_unicast).valid);
}

TEST(NetworkCode, FirstFailureIsReported) {
  const auto net = formats::parse_network(kParallel);
  // f1 is silent yet e1 carries a symbol: decoding holds, encoding at s1 fails.
  const auto v = validate_network_code(net, code_for(net, 1, {"0010", "0101"}), CodeKind::correlated);
  EXPECT_FALSE(v.valid);
  EXPECT_EQ(v.failure->condition, Condition::encoding);
  EXPECT_EQ(v.failure->link, 2u);
  // f1 not recoverable at d1.
  const auto d = validate_network_code(net, code_for(net, 1, {"1000", "0101"}), CodeKind::correlated);
  EXPECT_EQ(d.failure->condition, Condition::decoding);
  EXPECT_EQ(d.failure->link, 0u);
  std::vector<std::string> wrong_ids{"f2", "f1", "e1", "e2"};
  const std::vector<std::string> rows{"1010"};
  EXPECT_THROW((void)validate_network_code(net, NetworkCode(wrong_ids, 1, BitMatrix::from_strings(4, rows)),
                                           CodeKind::correlated),
               DimensionMismatch);
}

TEST(NetworkCode, CorrelatedVerdictEqualsGlrcVerdict) {
  random::Engine rng(141);
  for (const char* name : {"butterfly.json", "two_unicast.json", "single_link.json"}) {
    const auto net = fixture(name);
    const auto g = build_recoverability_graph(net);
    for (int trial = 0; trial < 60; ++trial) {
      const std::size_t p = 1 + rng() % 2;
      const std::size_t width = net.link_count() * p;
      const auto gen = trial % 2 ? random::valid_glrc(g, p, rng).generator()
                                 : random::full_rank_matrix(1 + rng() % std::min<std::size_t>(3, width), width, rng);
      const auto code = from_glrc(net, Glrc(net.link_count(), p, gen));
      const auto nv = validate_network_code(net, code, CodeKind::correlated);
      const auto gv = validate_glrc(to_glrc(code), g);
      ASSERT_EQ(nv.valid, gv.valid);
      if (!nv.valid) {
        ASSERT_EQ(std::pair(nv.failure->link, nv.failure->slot), *gv.first_failure);
      }
    }
  }
}

TEST(Bound, ButterflyReport) {
  const auto report = compute_bound(fixture("butterfly.json"));
  EXPECT_EQ(report.n_links, 9u);
  EXPECT_EQ(report.r, Rational(3, 2));
  EXPECT_EQ(report.packing.dual_value, Rational(3, 2));
  EXPECT_EQ(report.fvs->size, 2u);
  EXPECT_EQ(report.certified_upper, Rational(2));
  const double expected = 1.5 * std::log2(9.0) * std::log2(std::log2(9.0));
  EXPECT_NEAR(report.formula_upper, expected, 1e-12);
  EXPECT_EQ(report.formula_upper_rounded, Rational(std::llround(expected * 1e6), 1000000));
  EXPECT_EQ(report.glrc.normalized_rate(), Rational(3, 2));
  EXPECT_TRUE(validate_network_code(fixture("butterfly.json"), report.network_code, CodeKind::correlated).valid);
}

TEST(Bound, OptionsAndErrors) {
  BoundOptions no_fvs;
  no_fvs.exact_fvs = false;
  const auto report = compute_bound(fixture("butterfly.json"), no_fvs);
  EXPECT_FALSE(report.fvs.has_value());
  EXPECT_FALSE(report.certified_upper.has_value());
  EXPECT_TRUE(report.fvs_skipped_reason.has_value());
  BoundOptions tiny;
  tiny.fvs_node_limit = 3;
  EXPECT_FALSE(compute_bound(fixture("butterfly.json"), tiny).fvs.has_value());
  EXPECT_THROW((void)compute_bound(fixture("butterfly_extra_source.json")), InvalidInput);
}

TEST(Bound, FormulaClampsSmallNetworks) {
  EXPECT_DOUBLE_EQ(formula_upper_bound(Rational(1), 1), 1.0);
  EXPECT_DOUBLE_EQ(formula_upper_bound(Rational(1), 2), 1.0);
  EXPECT_DOUBLE_EQ(formula_upper_bound(Rational(1), 16), 8.0);
}
