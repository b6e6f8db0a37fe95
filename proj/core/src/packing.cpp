#include "icdual/packing.hpp"

#include <algorithm>
#include <optional>
#include <queue>
#include <string>

#include "icdual/error.hpp"

namespace icdual {

void check_packing(const CyclePacking& packing, const SideInfoDigraph& g) {
  if (packing.graph_n != g.n()) throw InvalidInput("packing built for a graph of different order");
  std::vector<Rational> load(g.n());
  Rational total;
  for (const auto& entry : packing.entries) {
    const auto& c = entry.cycle;
    if (entry.weight <= Rational(0)) throw InvalidInput("packing weight must be positive");
    if (c.size() < 2) throw InvalidInput("packed cycle shorter than 2");
    std::vector<bool> seen(g.n(), false);
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i] >= g.n()) throw InvalidInput("packed cycle vertex out of range");
      if (seen[c[i]]) throw InvalidInput("packed cycle is not simple");
      seen[c[i]] = true;
      if (!g.has_edge(c[i], c[(i + 1) % c.size()])) throw InvalidInput("packed cycle uses a missing arc");
      load[c[i]] += entry.weight;
    }
    total += entry.weight;
  }
  for (Vertex v = 0; v < g.n(); ++v) {
    if (load[v] > Rational(1)) throw InvalidInput("vertex " + std::to_string(v) + " carries weight above 1");
  }
  if (total != packing.value) throw InvalidInput("packing value does not equal the sum of its weights");
}

namespace {

// Revised simplex for  max 1ᵀy  s.t.  A y ≤ 1, y ≥ 0  where column j of A is
// the vertex-incidence vector of cycle j. Variables [0, m) are cycles and
// [m, m + n) the slacks; the slack basis is feasible from the start.
class PackingSimplex {
 public:
  PackingSimplex(std::size_t n, const std::vector<Cycle>& cycles)
      : n_(n), cycles_(cycles), inverse_(n, std::vector<Rational>(n)), x_basic_(n, Rational(1)), basis_(n) {
    for (std::size_t r = 0; r < n_; ++r) {
      inverse_[r][r] = Rational(1);
      basis_[r] = cycles_.size() + r;
    }
  }

  void solve() {
    while (true) {
      const auto prices = dual_prices();
      const auto entering = choose_entering(prices);
      if (!entering) return;
      const auto direction = column_image(*entering);
      pivot(choose_leaving(direction), *entering, direction);
      ++pivots_;
    }
  }

  [[nodiscard]] std::vector<Rational> dual_prices() const {
    std::vector<Rational> prices(n_);
    for (std::size_t r = 0; r < n_; ++r) {
      if (basis_[r] >= cycles_.size()) continue;  // slack cost is 0
      for (std::size_t v = 0; v < n_; ++v) {
        if (inverse_[r][v].num() != 0) prices[v] += inverse_[r][v];
      }
    }
    return prices;
  }

  [[nodiscard]] std::vector<Rational> primal() const {
    std::vector<Rational> y(cycles_.size());
    for (std::size_t r = 0; r < n_; ++r) {
      if (basis_[r] < cycles_.size()) y[basis_[r]] = x_basic_[r];
    }
    return y;
  }

  [[nodiscard]] std::size_t pivots() const noexcept { return pivots_; }

 private:
  // Bland: the lowest-indexed variable with positive reduced cost.
  [[nodiscard]] std::optional<std::size_t> choose_entering(const std::vector<Rational>& prices) const {
    for (std::size_t j = 0; j < cycles_.size(); ++j) {
      Rational covered;
      for (Vertex v : cycles_[j]) covered += prices[v];
      if (covered < Rational(1)) return j;
    }
    for (std::size_t v = 0; v < n_; ++v) {
      if (prices[v] < Rational(0)) return cycles_.size() + v;
    }
    return std::nullopt;
  }

  [[nodiscard]] std::vector<Rational> column_image(std::size_t var) const {
    std::vector<Rational> d(n_);
    for (std::size_t r = 0; r < n_; ++r) {
      if (var < cycles_.size()) {
        for (Vertex v : cycles_[var]) d[r] += inverse_[r][v];
      } else {
        d[r] = inverse_[r][var - cycles_.size()];
      }
    }
    return d;
  }

  // Minimum ratio, ties broken by the lowest basic variable index.
  [[nodiscard]] std::size_t choose_leaving(const std::vector<Rational>& d) const {
    std::optional<std::size_t> best;
    Rational best_ratio;
    for (std::size_t r = 0; r < n_; ++r) {
      if (d[r] <= Rational(0)) continue;
      const Rational ratio = x_basic_[r] / d[r];
      if (!best || ratio < best_ratio || (ratio == best_ratio && basis_[r] < basis_[*best])) {
        best = r;
        best_ratio = ratio;
      }
    }
    // The feasible region lies inside the unit box, so some row always bounds the step.
    if (!best) throw std::logic_error("packing LP reported unbounded");
    return *best;
  }

  void pivot(std::size_t row, std::size_t entering, const std::vector<Rational>& d) {
    const Rational scale = d[row];
    for (auto& entry : inverse_[row]) entry /= scale;
    x_basic_[row] /= scale;
    for (std::size_t r = 0; r < n_; ++r) {
      if (r == row || d[r].num() == 0) continue;
      const Rational factor = d[r];
      for (std::size_t v = 0; v < n_; ++v) {
        if (inverse_[row][v].num() != 0) inverse_[r][v] -= factor * inverse_[row][v];
      }
      x_basic_[r] -= factor * x_basic_[row];
    }
    basis_[row] = entering;
  }

  std::size_t n_;
  const std::vector<Cycle>& cycles_;
  std::vector<std::vector<Rational>> inverse_;
  std::vector<Rational> x_basic_;
  std::vector<std::size_t> basis_;
  std::size_t pivots_ = 0;
};

}  // namespace

FractionalPacking fractional_cycle_packing(const SideInfoDigraph& g, const PackingCaps& caps) {
  const std::size_t max_len = std::min(caps.max_cycle_len, std::max<std::size_t>(g.n(), 2));
  auto enumeration = enumerate_simple_cycles(g, max_len, caps.max_cycles);

  FractionalPacking result;
  result.packing.graph_n = g.n();
  result.cycles_considered = enumeration.cycles.size();
  result.lower_bound_only = enumeration.truncated || max_len < g.n();

  PackingSimplex simplex(g.n(), enumeration.cycles);
  simplex.solve();
  result.pivots = simplex.pivots();

  const auto y = simplex.primal();
  for (std::size_t j = 0; j < y.size(); ++j) {
    if (y[j] > Rational(0)) {
      result.packing.entries.push_back({enumeration.cycles[j], y[j]});
      result.packing.value += y[j];
    }
  }
  result.dual_cover = simplex.dual_prices();
  for (const auto& price : result.dual_cover) result.dual_value += price;
  return result;
}

namespace {

// Shortest cycle through `start` among live vertices, by BFS; empty if none.
Cycle shortest_cycle_through(const SideInfoDigraph& g, Vertex start, const std::vector<bool>& removed) {
  constexpr Vertex kNone = std::numeric_limits<Vertex>::max();
  std::vector<Vertex> parent(g.n(), kNone);
  std::vector<bool> seen(g.n(), false);
  std::queue<Vertex> frontier;
  frontier.push(start);
  seen[start] = true;
  while (!frontier.empty()) {
    const Vertex u = frontier.front();
    frontier.pop();
    for (Vertex w : g.side_info(u)) {
      if (removed[w]) continue;
      if (w == start) {
        Cycle c;
        for (Vertex v = u; v != kNone; v = parent[v]) c.push_back(v);
        std::reverse(c.begin(), c.end());
        return c;
      }
      if (!seen[w]) {
        seen[w] = true;
        parent[w] = u;
        frontier.push(w);
      }
    }
  }
  return {};
}

}  // namespace

CyclePacking greedy_integral_packing(const SideInfoDigraph& g) {
  CyclePacking packing;
  packing.graph_n = g.n();
  std::vector<bool> removed(g.n(), false);
  while (true) {
    Cycle best;
    for (Vertex v = 0; v < g.n(); ++v) {
      if (removed[v]) continue;
      auto c = shortest_cycle_through(g, v, removed);
      if (!c.empty() && (best.empty() || c.size() < best.size())) best = std::move(c);
    }
    if (best.empty()) break;
    std::rotate(best.begin(), std::min_element(best.begin(), best.end()), best.end());
    for (Vertex v : best) removed[v] = true;
    packing.entries.push_back({std::move(best), Rational(1)});
    packing.value += Rational(1);
  }
  return packing;
}

FvsResult exact_fvs(const SideInfoDigraph& g, std::size_t node_limit) {
  if (g.n() > node_limit) {
    throw SizeLimitExceeded("exact FVS limited to " + std::to_string(node_limit) + " vertices, graph has " +
                            std::to_string(g.n()));
  }
  const auto candidates = cyclic_vertices(g);
  // Vertex-disjoint cycles each need their own deleted vertex.
  const auto lower = static_cast<std::size_t>(greedy_integral_packing(g).value.num());

  std::vector<bool> removed(g.n(), false);
  for (std::size_t size = lower; size <= candidates.size(); ++size) {
    // Lexicographic walk over size-element subsets of `candidates`.
    std::vector<std::size_t> pick(size);
    for (std::size_t i = 0; i < size; ++i) pick[i] = i;
    while (true) {
      std::fill(removed.begin(), removed.end(), false);
      for (auto idx : pick) removed[candidates[idx]] = true;
      if (is_acyclic(g, removed)) {
        FvsResult result;
        for (auto idx : pick) result.vertices.push_back(candidates[idx]);
        result.size = size;
        result.exact = true;
        return result;
      }
      std::size_t i = size;
      while (i > 0 && pick[i - 1] == candidates.size() - size + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t k = i; k < size; ++k) pick[k] = pick[k - 1] + 1;
    }
  }
  throw std::logic_error("exact FVS search exhausted without finding a transversal");
}

}  // namespace icdual
