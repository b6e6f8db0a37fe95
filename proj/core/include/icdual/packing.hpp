#pragma once

#include <cstddef>
#include <limits>
#include <vector>

#include "icdual/digraph.hpp"
#include "icdual/rational.hpp"

namespace icdual {

struct PackedCycle {
  Cycle cycle;
  Rational weight;

  friend bool operator==(const PackedCycle&, const PackedCycle&) = default;
};

/// Fractional cycle packing: every vertex carries total weight at most 1 over
/// the cycles through it.
struct CyclePacking {
  std::size_t graph_n = 0;
  std::vector<PackedCycle> entries;
  Rational value;

  friend bool operator==(const CyclePacking&, const CyclePacking&) = default;
};

/// Throws InvalidInput unless `packing` is a feasible packing on `g`: positive
/// weights, simple cycles whose arcs exist, vertex loads ≤ 1, matching value.
void check_packing(const CyclePacking& packing, const SideInfoDigraph& g);

struct PackingCaps {
  std::size_t max_cycle_len = std::numeric_limits<std::size_t>::max();
  std::size_t max_cycles = kDefaultMaxCycles;
};

struct FractionalPacking {
  CyclePacking packing;
  /// Optimal dual: a fractional vertex weighting covering every enumerated
  /// cycle with weight ≥ 1.
  std::vector<Rational> dual_cover;
  Rational dual_value;
  std::size_t cycles_considered = 0;
  std::size_t pivots = 0;
  /// Set when cycle enumeration hit a cap; the value is then only a lower
  /// bound on the packing number of the full graph.
  bool lower_bound_only = false;
};

/// Maximum fractional cycle packing, solved exactly over the enumerated cycle
/// set by a rational revised simplex with Bland's rule.
[[nodiscard]] FractionalPacking fractional_cycle_packing(const SideInfoDigraph& g, const PackingCaps& caps = {});

/// Repeatedly takes a shortest remaining cycle and deletes its vertices.
[[nodiscard]] CyclePacking greedy_integral_packing(const SideInfoDigraph& g);

struct FvsResult {
  std::vector<Vertex> vertices;
  std::size_t size = 0;
  bool exact = false;
};

inline constexpr std::size_t kDefaultFvsNodeLimit = 25;

/// Minimum feedback vertex set by ascending-cardinality subset search over the
/// vertices that lie on cycles. Among minimum sets the lexicographically least
/// is returned. Throws SizeLimitExceeded when n > node_limit.
[[nodiscard]] FvsResult exact_fvs(const SideInfoDigraph& g, std::size_t node_limit = kDefaultFvsNodeLimit);

}  // namespace icdual
