#include <gtest/gtest.h>

#include "icdual/error.hpp"
#include "icdual/gf2.hpp"
#include "icdual/random_codes.hpp"
#include "oracles.hpp"

using namespace icdual;
using gf2::BitMatrix;
using gf2::BitVector;

TEST(BitVector, StringRoundTripAndWeight) {
  const auto v = BitVector::from_string("1011001");
  EXPECT_EQ(v.size(), 7u);
  EXPECT_EQ(v.to_string(), "1011001");
  EXPECT_EQ(v.weight(), 4u);
  EXPECT_EQ(v.first_set(), 0u);
  EXPECT_EQ(BitVector::from_string("0010").first_set(), 2u);
  EXPECT_TRUE(BitVector(5).is_zero());
  EXPECT_THROW((void)BitVector::from_string("10x"), std::invalid_argument);
}

TEST(BitVector, WideVectorsCrossWordBoundary) {
  BitVector a(130), b(130);
  a.set(0, true);
  a.set(64, true);
  a.set(129, true);
  b.set(64, true);
  b.set(129, true);
  EXPECT_FALSE(a.dot(b));
  b.set(0, true);
  EXPECT_TRUE(a.dot(b));
  a ^= b;
  EXPECT_TRUE(a.is_zero());
}

TEST(BitMatrix, ShapeChecks) {
  const std::vector<std::string> rows{"101", "011"};
  const auto m = BitMatrix::from_strings(3, rows);
  EXPECT_EQ(m.transpose().to_strings(), (std::vector<std::string>{"10", "01", "11"}));
  EXPECT_EQ(m.column(2).to_string(), "11");
  EXPECT_EQ(m.multiply(BitVector::from_string("111")).to_string(), "00");
  EXPECT_EQ(m.left_multiply(BitVector::from_string("11")).to_string(), "110");
  const std::vector<std::string> bad{"10", "011"};
  EXPECT_THROW((void)BitMatrix::from_strings(3, bad), std::invalid_argument);
  EXPECT_THROW((void)m.multiply(BitVector(2)), DimensionMismatch);
}

TEST(Rank, FrozenValues) {
  const std::vector<std::string> a{"110", "011", "101"};
  EXPECT_EQ(gf2::rank(BitMatrix::from_strings(3, a)), 2u);
  EXPECT_EQ(gf2::rank(BitMatrix::identity(5)), 5u);
  EXPECT_EQ(gf2::rank(BitMatrix(0, 4)), 0u);
  const std::vector<std::string> b{"1111", "0000", "1111"};
  EXPECT_EQ(gf2::rank(BitMatrix::from_strings(4, b)), 1u);
}

TEST(Rank, MatchesIntegerEliminationOnRandomMatrices) {
  random::Engine rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t rows = 1 + rng() % 9, cols = 1 + rng() % 9;
    BitMatrix m(0, cols);
    for (std::size_t r = 0; r < rows; ++r) m.append_row(random::bits(cols, rng));
    ASSERT_EQ(gf2::rank(m), oracle::rank(oracle::to_ints(m)));
    ASSERT_EQ(gf2::rank(m), gf2::rank(m.transpose()));
  }
}

TEST(Nullspace, DimensionAndOrthogonality) {
  random::Engine rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t rows = rng() % 7, cols = 1 + rng() % 9;
    BitMatrix m(0, cols);
    for (std::size_t r = 0; r < rows; ++r) m.append_row(random::bits(cols, rng));
    const auto null = gf2::nullspace_basis(m);
    ASSERT_EQ(null.dim() + gf2::rank(m), cols);
    for (const auto& v : null.basis().row_list()) ASSERT_TRUE(m.multiply(v).is_zero());
  }
}

TEST(Nullspace, FrozenBasis) {
  const std::vector<std::string> rows{"111"};
  const auto null = gf2::nullspace_basis(BitMatrix::from_strings(3, rows));
  EXPECT_EQ(null.basis().to_strings(), (std::vector<std::string>{"101", "011"}));
}

TEST(Subspace, SpanMembershipAgreesWithSubsetSearch) {
  random::Engine rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t k = rng() % 5, cols = 1 + rng() % 6;
    BitMatrix gens(0, cols);
    for (std::size_t r = 0; r < k; ++r) gens.append_row(random::bits(cols, rng));
    const auto space = gf2::Subspace::span_of(gens);
    const auto target = random::bits(cols, rng);
    const auto ints = oracle::to_ints(gens);
    std::vector<int> t(cols);
    for (std::size_t j = 0; j < cols; ++j) t[j] = target.get(j);
    const bool expected = oracle::in_span_exhaustive(ints, t);
    ASSERT_EQ(space.contains(target), expected);
    ASSERT_EQ(gf2::in_span(target, space).has_value(), expected);

    const auto coeffs = gf2::express(gens.row_list(), target);
    ASSERT_EQ(coeffs.has_value(), expected);
    if (coeffs) {
      BitVector acc(cols);
      for (std::size_t r = 0; r < k; ++r)
        if (coeffs->get(r)) acc ^= gens.row(r);
      ASSERT_EQ(acc, target);
    }
  }
}

TEST(Subspace, ElementsCountAndCanonicalBasis) {
  const std::vector<std::string> a{"1100", "0110"};
  const std::vector<std::string> b{"1010", "0110"};
  const auto sa = gf2::Subspace::span_of(BitMatrix::from_strings(4, a));
  const auto sb = gf2::Subspace::span_of(BitMatrix::from_strings(4, b));
  EXPECT_EQ(sa.elements().size(), 4u);
  EXPECT_EQ(sa.basis().to_strings(), sb.basis().to_strings());
  EXPECT_EQ(gf2::intersection_dim(sa, sb), 2u);
}

TEST(Subspace, IntersectionDimensionFormula) {
  random::Engine rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t cols = 1 + rng() % 6;
    BitMatrix a(0, cols), b(0, cols);
    for (std::size_t r = rng() % 4; r > 0; --r) a.append_row(random::bits(cols, rng));
    for (std::size_t r = rng() % 4; r > 0; --r) b.append_row(random::bits(cols, rng));
    const auto sa = gf2::Subspace::span_of(a), sb = gf2::Subspace::span_of(b);
    std::size_t common = 0;
    for (const auto& v : sa.elements()) common += sb.contains(v) ? 1 : 0;
    ASSERT_EQ(std::size_t{1} << gf2::intersection_dim(sa, sb), common);
    ASSERT_EQ(gf2::sum(sa, sb).dim() + gf2::intersection_dim(sa, sb), sa.dim() + sb.dim());
  }
}

TEST(Solve, SolutionSatisfiesSystem) {
  random::Engine rng(9);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t rows = 1 + rng() % 6, cols = 1 + rng() % 6;
    BitMatrix a(0, cols);
    for (std::size_t r = 0; r < rows; ++r) a.append_row(random::bits(cols, rng));
    const auto b = random::bits(rows, rng);
    const auto x = gf2::solve(a, b);
    bool exists = false;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << cols); ++m) {
      BitVector cand(cols);
      for (std::size_t j = 0; j < cols; ++j) cand.set(j, m >> j & 1);
      if (a.multiply(cand) == b) exists = true;
    }
    ASSERT_EQ(x.has_value(), exists);
    if (x) ASSERT_EQ(a.multiply(*x), b);
  }
}

TEST(EnumerateSubspaces, GaussianBinomialCounts) {
  // Number of k-dimensional subspaces of GF(2)^4: 1, 15, 35, 15, 1.
  const std::size_t expected[] = {1, 15, 35, 15, 1};
  for (std::size_t k = 0; k <= 4; ++k) {
    const auto all = gf2::enumerate_subspaces(4, k);
    EXPECT_EQ(all.size(), expected[k]);
    std::set<std::vector<std::string>> distinct;
    for (const auto& m : all) {
      EXPECT_EQ(gf2::rank(m), k);
      distinct.insert(m.to_strings());
    }
    EXPECT_EQ(distinct.size(), expected[k]);
  }
}
