#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace icdual {

using Vertex = std::size_t;
/// A simple directed cycle in canonical rotation: smallest vertex first,
/// traversal direction preserved.
using Cycle = std::vector<Vertex>;

/// Digraph with an arc i -> j exactly when j is in S_i.
///
/// Read as a side-information graph, S_i lists the messages user i already
/// holds. Read as a recoverability graph, S_i lists the supersymbols from which
/// supersymbol i is recomputed. Both readings share this type.
class SideInfoDigraph {
 public:
  SideInfoDigraph() = default;

  /// Validates and sorts each S_i. Throws InvalidInput on i ∈ S_i, indices
  /// outside [0, n), or duplicates within one set.
  static SideInfoDigraph from_side_info(std::size_t n, std::vector<std::vector<Vertex>> sets);

  [[nodiscard]] std::size_t n() const noexcept { return sets_.size(); }
  [[nodiscard]] const std::vector<Vertex>& side_info(Vertex i) const { return sets_[i]; }
  [[nodiscard]] const std::vector<std::vector<Vertex>>& side_info_sets() const noexcept { return sets_; }
  [[nodiscard]] bool has_edge(Vertex from, Vertex to) const;
  [[nodiscard]] std::size_t edge_count() const noexcept;

  friend bool operator==(const SideInfoDigraph&, const SideInfoDigraph&) = default;

 private:
  std::vector<std::vector<Vertex>> sets_;
};

struct CycleEnumeration {
  std::vector<Cycle> cycles;
  bool truncated = false;
};

inline constexpr std::size_t kDefaultMaxCycles = 100000;

/// Every simple cycle of length ≤ max_len, each once, ordered by smallest
/// vertex and then by depth-first discovery. Stops after max_count cycles and
/// sets `truncated` when at least one more cycle exists.
///
/// Unbounded length (max_len ≥ n) runs Johnson's blocking search. A shorter
/// cap falls back to plain backtracking, since blocking can hide cycles that
/// are only reachable through longer detours.
[[nodiscard]] CycleEnumeration enumerate_simple_cycles(const SideInfoDigraph& g, std::size_t max_len,
                                                       std::size_t max_count = kDefaultMaxCycles);

/// Component index for every vertex, from Tarjan's algorithm. Components are
/// numbered in reverse topological order of the condensation.
[[nodiscard]] std::vector<std::size_t> strongly_connected_components(
    const std::vector<std::vector<Vertex>>& adjacency);

/// Vertices that lie on at least one directed cycle.
[[nodiscard]] std::vector<Vertex> cyclic_vertices(const SideInfoDigraph& g);

[[nodiscard]] bool is_acyclic(const SideInfoDigraph& g);
/// Acyclicity of the subgraph induced by the vertices not flagged in `removed`.
[[nodiscard]] bool is_acyclic(const SideInfoDigraph& g, const std::vector<bool>& removed);

/// Unit-capacity multigraph for mincut computations. Parallel arcs add capacity.
class FlowGraph {
 public:
  explicit FlowGraph(std::size_t node_count = 0) : node_count_(node_count) {}

  /// Throws InvalidInput when an endpoint is not a node.
  void add_arc(std::size_t tail, std::size_t head);

  [[nodiscard]] std::size_t node_count() const noexcept { return node_count_; }
  [[nodiscard]] const std::vector<std::pair<std::size_t, std::size_t>>& arcs() const noexcept { return arcs_; }

 private:
  std::size_t node_count_;
  std::vector<std::pair<std::size_t, std::size_t>> arcs_;
};

[[nodiscard]] bool is_acyclic(const FlowGraph& g);

/// Maximum s-t flow with unit arc capacities, i.e. the number of arc-disjoint
/// s -> t paths. Throws InvalidInput for unknown nodes or s == t.
[[nodiscard]] std::size_t max_flow(const FlowGraph& g, std::size_t s, std::size_t t);

}  // namespace icdual
