#include "icdual/digraph.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <string>

#include "icdual/error.hpp"

namespace icdual {

SideInfoDigraph SideInfoDigraph::from_side_info(std::size_t n, std::vector<std::vector<Vertex>> sets) {
  if (sets.size() != n) {
    throw InvalidInput("expected " + std::to_string(n) + " side-information sets, got " +
                       std::to_string(sets.size()));
  }
  for (Vertex i = 0; i < n; ++i) {
    auto& s = sets[i];
    for (Vertex j : s) {
      if (j >= n) throw InvalidInput("vertex " + std::to_string(i) + ": index " + std::to_string(j) + " out of range");
      if (j == i) throw InvalidInput("vertex " + std::to_string(i) + ": self-loop (i in S_i)");
    }
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) {
      throw InvalidInput("vertex " + std::to_string(i) + ": duplicate side-information index");
    }
  }
  SideInfoDigraph g;
  g.sets_ = std::move(sets);
  return g;
}

bool SideInfoDigraph::has_edge(Vertex from, Vertex to) const {
  return std::binary_search(sets_[from].begin(), sets_[from].end(), to);
}

std::size_t SideInfoDigraph::edge_count() const noexcept {
  std::size_t total = 0;
  for (const auto& s : sets_) total += s.size();
  return total;
}

std::vector<std::size_t> strongly_connected_components(const std::vector<std::vector<Vertex>>& adjacency) {
  // Iterative Tarjan.
  const std::size_t n = adjacency.size();
  constexpr std::size_t kUnset = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> index(n, kUnset), low(n, 0), comp(n, kUnset);
  std::vector<bool> on_stack(n, false);
  std::vector<Vertex> stack;
  std::vector<std::pair<Vertex, std::size_t>> call;  // (vertex, next neighbour position)
  std::size_t counter = 0, comp_count = 0;

  for (Vertex root = 0; root < n; ++root) {
    if (index[root] != kUnset) continue;
    call.emplace_back(root, 0);
    while (!call.empty()) {
      auto& [v, pos] = call.back();
      if (pos == 0 && index[v] == kUnset) {
        index[v] = low[v] = counter++;
        stack.push_back(v);
        on_stack[v] = true;
      }
      if (pos < adjacency[v].size()) {
        const Vertex w = adjacency[v][pos++];
        if (index[w] == kUnset) {
          call.emplace_back(w, 0);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      if (low[v] == index[v]) {
        Vertex w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp[w] = comp_count;
        } while (w != v);
        ++comp_count;
      }
      const Vertex finished = v;
      call.pop_back();
      if (!call.empty()) {
        const Vertex parent = call.back().first;
        low[parent] = std::min(low[parent], low[finished]);
      }
    }
  }
  return comp;
}

std::vector<Vertex> cyclic_vertices(const SideInfoDigraph& g) {
  const auto comp = strongly_connected_components(g.side_info_sets());
  std::vector<std::size_t> size(g.n(), 0);
  for (auto c : comp) ++size[c];
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.n(); ++v) {
    if (size[comp[v]] > 1) out.push_back(v);
  }
  return out;
}

bool is_acyclic(const SideInfoDigraph& g) { return cyclic_vertices(g).empty(); }

bool is_acyclic(const SideInfoDigraph& g, const std::vector<bool>& removed) {
  // Kahn's algorithm on the surviving vertices.
  std::vector<std::size_t> indegree(g.n(), 0);
  std::size_t alive = 0;
  for (Vertex v = 0; v < g.n(); ++v) {
    if (removed[v]) continue;
    ++alive;
    for (Vertex w : g.side_info(v)) {
      if (!removed[w]) ++indegree[w];
    }
  }
  std::vector<Vertex> ready;
  for (Vertex v = 0; v < g.n(); ++v) {
    if (!removed[v] && indegree[v] == 0) ready.push_back(v);
  }
  std::size_t seen = 0;
  while (!ready.empty()) {
    const Vertex v = ready.back();
    ready.pop_back();
    ++seen;
    for (Vertex w : g.side_info(v)) {
      if (!removed[w] && --indegree[w] == 0) ready.push_back(w);
    }
  }
  return seen == alive;
}

namespace {

class CycleCollector {
 public:
  CycleCollector(const SideInfoDigraph& g, std::size_t max_len, std::size_t max_count)
      : g_(g), max_len_(max_len), max_count_(max_count) {}

  CycleEnumeration run() {
    const std::size_t n = g_.n();
    if (max_len_ >= n) {
      blocked_.assign(n, false);
      block_map_.assign(n, {});
      in_scope_.assign(n, false);
      for (Vertex s = 0; s < n && !stop_; ++s) {
        if (!restrict_to_component(s)) continue;
        start_ = s;
        johnson_circuit(s);
      }
    } else {
      on_path_.assign(n, false);
      for (Vertex s = 0; s < n && !stop_; ++s) {
        start_ = s;
        backtrack(s);
      }
    }
    return std::move(result_);
  }

 private:
  // Marks the strongly connected component of s within the subgraph induced by
  // {s, s+1, ...}. Returns false when that component is trivial.
  bool restrict_to_component(Vertex s) {
    const std::size_t n = g_.n();
    std::vector<std::vector<Vertex>> sub(n - s);
    for (Vertex v = s; v < n; ++v) {
      for (Vertex w : g_.side_info(v)) {
        if (w >= s) sub[v - s].push_back(w - s);
      }
    }
    const auto comp = strongly_connected_components(sub);
    std::size_t members = 0;
    for (Vertex v = 0; v < n; ++v) {
      in_scope_[v] = v >= s && comp[v - s] == comp[0];
      if (in_scope_[v]) {
        ++members;
        blocked_[v] = false;
        block_map_[v].clear();
      }
    }
    return members > 1;
  }

  bool johnson_circuit(Vertex v) {
    bool found = false;
    path_.push_back(v);
    blocked_[v] = true;
    for (Vertex w : g_.side_info(v)) {
      if (stop_) break;
      if (!in_scope_[w]) continue;
      if (w == start_) {
        emit();
        found = true;
      } else if (!blocked_[w] && johnson_circuit(w)) {
        found = true;
      }
    }
    if (found) {
      unblock(v);
    } else {
      for (Vertex w : g_.side_info(v)) {
        if (in_scope_[w] && std::find(block_map_[w].begin(), block_map_[w].end(), v) == block_map_[w].end()) {
          block_map_[w].push_back(v);
        }
      }
    }
    path_.pop_back();
    return found;
  }

  void unblock(Vertex v) {
    blocked_[v] = false;
    auto pending = std::move(block_map_[v]);
    block_map_[v].clear();
    for (Vertex w : pending) {
      if (blocked_[w]) unblock(w);
    }
  }

  void backtrack(Vertex v) {
    path_.push_back(v);
    on_path_[v] = true;
    for (Vertex w : g_.side_info(v)) {
      if (stop_) break;
      if (w == start_) {
        emit();
      } else if (w > start_ && !on_path_[w] && path_.size() < max_len_) {
        backtrack(w);
      }
    }
    on_path_[v] = false;
    path_.pop_back();
  }

  void emit() {
    if (result_.cycles.size() == max_count_) {
      result_.truncated = true;
      stop_ = true;
      return;
    }
    result_.cycles.push_back(path_);
  }

  const SideInfoDigraph& g_;
  std::size_t max_len_;
  std::size_t max_count_;
  Vertex start_ = 0;
  bool stop_ = false;
  std::vector<Vertex> path_;
  std::vector<bool> blocked_;
  std::vector<std::vector<Vertex>> block_map_;
  std::vector<bool> in_scope_;
  std::vector<bool> on_path_;
  CycleEnumeration result_;
};

}  // namespace

CycleEnumeration enumerate_simple_cycles(const SideInfoDigraph& g, std::size_t max_len, std::size_t max_count) {
  if (max_len < 2) throw InvalidInput("max_len must be at least 2");
  if (max_count < 1) throw InvalidInput("max_count must be at least 1");
  return CycleCollector(g, max_len, max_count).run();
}

void FlowGraph::add_arc(std::size_t tail, std::size_t head) {
  if (tail >= node_count_ || head >= node_count_) throw InvalidInput("arc references unknown node");
  arcs_.emplace_back(tail, head);
}

bool is_acyclic(const FlowGraph& g) {
  std::vector<std::vector<Vertex>> adjacency(g.node_count());
  for (const auto& [tail, head] : g.arcs()) {
    if (tail == head) return false;
    adjacency[tail].push_back(head);
  }
  const auto comp = strongly_connected_components(adjacency);
  std::vector<std::size_t> size(g.node_count(), 0);
  for (auto c : comp) {
    if (++size[c] > 1) return false;
  }
  return true;
}

std::size_t max_flow(const FlowGraph& g, std::size_t s, std::size_t t) {
  if (s >= g.node_count() || t >= g.node_count()) throw InvalidInput("max_flow: unknown node");
  if (s == t) throw InvalidInput("max_flow: source equals sink");

  // Residual arcs stored in pairs: 2i forward, 2i+1 reverse.
  struct Residual {
    std::size_t to;
    int capacity;
  };
  std::vector<Residual> residual;
  std::vector<std::vector<std::size_t>> out(g.node_count());
  for (const auto& [tail, head] : g.arcs()) {
    out[tail].push_back(residual.size());
    residual.push_back({head, 1});
    out[head].push_back(residual.size());
    residual.push_back({tail, 0});
  }

  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  std::size_t flow = 0;
  while (true) {
    std::vector<std::size_t> via(g.node_count(), kNone);
    std::vector<bool> seen(g.node_count(), false);
    std::queue<std::size_t> frontier;
    frontier.push(s);
    seen[s] = true;
    while (!frontier.empty() && !seen[t]) {
      const auto u = frontier.front();
      frontier.pop();
      for (auto id : out[u]) {
        const auto& arc = residual[id];
        if (arc.capacity > 0 && !seen[arc.to]) {
          seen[arc.to] = true;
          via[arc.to] = id;
          frontier.push(arc.to);
        }
      }
    }
    if (!seen[t]) return flow;
    for (std::size_t v = t; v != s;) {
      const auto id = via[v];
      residual[id].capacity -= 1;
      residual[id ^ 1].capacity += 1;
      v = residual[id ^ 1].to;
    }
    ++flow;
  }
}

}  // namespace icdual
