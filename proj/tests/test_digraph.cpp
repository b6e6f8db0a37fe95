#include <gtest/gtest.h>

#include "icdual/digraph.hpp"
#include "icdual/error.hpp"
#include "icdual/random_codes.hpp"
#include "oracles.hpp"

using namespace icdual;

namespace {

SideInfoDigraph bidirected_cycle(std::size_t n) {
  std::vector<std::vector<Vertex>> sets(n);
  for (std::size_t i = 0; i < n; ++i) sets[i] = {(i + n - 1) % n, (i + 1) % n};
  return SideInfoDigraph::from_side_info(n, sets);
}

std::set<Cycle> as_set(const CycleEnumeration& e) { return {e.cycles.begin(), e.cycles.end()}; }

}  // namespace

TEST(SideInfoDigraph, RejectsMalformedSets) {
  EXPECT_THROW((void)SideInfoDigraph::from_side_info(2, {{1}}), InvalidInput);
  EXPECT_THROW((void)SideInfoDigraph::from_side_info(2, {{0}, {}}), InvalidInput);
  EXPECT_THROW((void)SideInfoDigraph::from_side_info(2, {{2}, {}}), InvalidInput);
  EXPECT_THROW((void)SideInfoDigraph::from_side_info(3, {{1, 1}, {}, {}}), InvalidInput);
}

TEST(SideInfoDigraph, SortsAndCountsEdges) {
  const auto g = SideInfoDigraph::from_side_info(3, {{2, 1}, {}, {0}});
  EXPECT_EQ(g.side_info(0), (std::vector<Vertex>{1, 2}));
  EXPECT_EQ(g.edge_count(), 3u);
  EXPECT_TRUE(g.has_edge(2, 0));
  EXPECT_FALSE(g.has_edge(0, 0));
}

TEST(Cycles, FrozenCounts) {
  // Bidirected C5: five 2-cycles and the two orientations of the 5-cycle.
  EXPECT_EQ(enumerate_simple_cycles(bidirected_cycle(5), 5).cycles.size(), 7u);
  // Complete bidirected K4: 6 + 8 + 6 simple cycles.
  std::vector<std::vector<Vertex>> k4(4);
  for (Vertex i = 0; i < 4; ++i)
    for (Vertex j = 0; j < 4; ++j)
      if (i != j) k4[i].push_back(j);
  const auto g = SideInfoDigraph::from_side_info(4, k4);
  EXPECT_EQ(enumerate_simple_cycles(g, 4).cycles.size(), 20u);
  EXPECT_EQ(enumerate_simple_cycles(g, 2).cycles.size(), 6u);
  EXPECT_EQ(enumerate_simple_cycles(g, 3).cycles.size(), 14u);
}

TEST(Cycles, MatchExhaustiveSearch) {
  random::Engine rng(21);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = 1 + rng() % 6;
    const auto g = random::digraph(n, 0.45, rng);
    const auto expected = oracle::cycles(g);
    const auto got = enumerate_simple_cycles(g, std::max<std::size_t>(n, 2));
    ASSERT_FALSE(got.truncated);
    ASSERT_EQ(got.cycles.size(), expected.size());
    ASSERT_EQ(as_set(got), expected);

    const std::size_t cap = 2 + rng() % 3;
    std::set<Cycle> short_ones;
    for (const auto& c : expected)
      if (c.size() <= cap) short_ones.insert(c);
    ASSERT_EQ(as_set(enumerate_simple_cycles(g, cap)), short_ones);
  }
}

TEST(Cycles, TruncationFlag) {
  const auto g = bidirected_cycle(5);
  EXPECT_TRUE(enumerate_simple_cycles(g, 5, 3).truncated);
  EXPECT_EQ(enumerate_simple_cycles(g, 5, 3).cycles.size(), 3u);
  EXPECT_FALSE(enumerate_simple_cycles(g, 5, 7).truncated);
  EXPECT_THROW((void)enumerate_simple_cycles(g, 1), InvalidInput);
  EXPECT_THROW((void)enumerate_simple_cycles(g, 3, 0), InvalidInput);
}

TEST(Acyclicity, AgreesWithTransitiveClosure) {
  random::Engine rng(8);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 6;
    const auto g = random::digraph(n, 0.3, rng);
    ASSERT_EQ(is_acyclic(g), oracle::acyclic_without(g, 0));
    const std::uint64_t mask = rng() & ((std::uint64_t{1} << n) - 1);
    std::vector<bool> removed(n);
    for (std::size_t v = 0; v < n; ++v) removed[v] = mask >> v & 1;
    ASSERT_EQ(is_acyclic(g, removed), oracle::acyclic_without(g, mask));

    const auto cyclic = cyclic_vertices(g);
    for (Vertex v = 0; v < n; ++v) {
      bool on_cycle = false;
      for (const auto& c : oracle::cycles(g)) on_cycle = on_cycle || std::count(c.begin(), c.end(), v);
      ASSERT_EQ(std::count(cyclic.begin(), cyclic.end(), v) == 1, on_cycle);
    }
  }
}

TEST(Scc, TwoComponents) {
  const std::vector<std::vector<Vertex>> adj{{1}, {0, 2}, {3}, {2}};
  const auto comp = strongly_connected_components(adj);
  EXPECT_EQ(comp[0], comp[1]);
  EXPECT_EQ(comp[2], comp[3]);
  EXPECT_NE(comp[0], comp[2]);
}

TEST(MaxFlow, UnitCapacityPaths) {
  FlowGraph g(6);
  // Butterfly core: two sources, shared bottleneck a->b, two side links.
  g.add_arc(0, 2);
  g.add_arc(1, 2);
  g.add_arc(2, 3);
  g.add_arc(3, 4);
  g.add_arc(3, 5);
  g.add_arc(0, 5);
  g.add_arc(1, 4);
  EXPECT_EQ(max_flow(g, 0, 4), 1u);
  EXPECT_EQ(max_flow(g, 0, 5), 2u);
  EXPECT_EQ(max_flow(g, 4, 0), 0u);
  EXPECT_TRUE(is_acyclic(g));
  g.add_arc(0, 4);
  g.add_arc(0, 4);
  EXPECT_EQ(max_flow(g, 0, 4), 3u);
  EXPECT_THROW((void)max_flow(g, 0, 0), InvalidInput);
  EXPECT_THROW((void)max_flow(g, 0, 9), InvalidInput);
  g.add_arc(4, 0);
  EXPECT_FALSE(is_acyclic(g));
}
