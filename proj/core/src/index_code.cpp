#include "icdual/index_code.hpp"

#include <bit>
#include <string>

#include "icdual/error.hpp"

namespace icdual {

IndexCode::IndexCode(std::size_t n, std::size_t p, gf2::BitMatrix generator)
    : n_(n), p_(p), generator_(std::move(generator)) {
  if (p_ == 0) throw InvalidInput("subsymbols per supersymbol must be positive");
  if (generator_.cols() != n_ * p_) {
    throw InvalidInput("index code generator has " + std::to_string(generator_.cols()) + " columns, expected n*p = " +
                       std::to_string(n_ * p_));
  }
  if (gf2::rank(generator_) != generator_.rows()) {
    throw InvalidInput("index code generator rows are linearly dependent");
  }
}

Rational IndexCode::broadcast_rate() const {
  return Rational(static_cast<std::int64_t>(k()), static_cast<std::int64_t>(p_));
}

Rational IndexCode::complementary_rate() const { return Rational(static_cast<std::int64_t>(n_)) - broadcast_rate(); }

IndexCodeVerdict validate_index_code(const IndexCode& code, const SideInfoDigraph& g) {
  if (g.n() != code.n()) {
    throw DimensionMismatch("index code has " + std::to_string(code.n()) + " messages, graph has " +
                            std::to_string(g.n()) + " users");
  }
  const std::size_t p = code.p();
  const std::size_t width = code.n() * p;
  const std::size_t k = code.k();

  IndexCodeVerdict verdict;
  for (Vertex user = 0; user < code.n(); ++user) {
    std::vector<gf2::BitVector> generators = code.generator().row_list();
    std::vector<std::size_t> side_columns;
    for (Vertex a : g.side_info(user)) {
      for (std::size_t b = 0; b < p; ++b) {
        side_columns.push_back(subsymbol_column(a, b, p));
        generators.push_back(gf2::BitVector::unit(width, side_columns.back()));
      }
    }
    for (std::size_t slot = 0; slot < p; ++slot) {
      const auto target = gf2::BitVector::unit(width, subsymbol_column(user, slot, p));
      const auto coeffs = gf2::express(generators, target);
      if (!coeffs) {
        verdict.first_failure = {user, slot};
        verdict.witnesses.clear();
        return verdict;
      }
      DecodingWitness w{user, slot, gf2::BitVector(k), {}};
      for (std::size_t r = 0; r < k; ++r) w.transmissions.set(r, coeffs->get(r));
      for (std::size_t t = 0; t < side_columns.size(); ++t) {
        if (coeffs->get(k + t)) w.side_columns.push_back(side_columns[t]);
      }
      verdict.witnesses.push_back(std::move(w));
    }
  }
  verdict.valid = true;
  return verdict;
}

bool apply_witness(const DecodingWitness& w, const gf2::BitVector& broadcast, const gf2::BitVector& messages) {
  bool value = w.transmissions.dot(broadcast);
  for (auto c : w.side_columns) value ^= messages.get(c);
  return value;
}

IndexCode construct_from_packing(const CyclePacking& packing, const SideInfoDigraph& g) {
  check_packing(packing, g);
  std::int64_t p = 1;
  for (const auto& entry : packing.entries) p = lcm_checked(p, entry.weight.den());

  const auto width = g.n() * static_cast<std::size_t>(p);
  const auto slots_per_vertex = static_cast<std::size_t>(p);
  std::vector<std::size_t> next_slot(g.n(), 0);
  gf2::BitMatrix rows(0, width);

  for (const auto& entry : packing.entries) {
    const auto share = static_cast<std::size_t>((entry.weight * Rational(p)).num());
    const auto& cycle = entry.cycle;
    // Slots [first[l], first[l] + share) of cycle vertex l belong to this cycle.
    std::vector<std::size_t> first(cycle.size());
    for (std::size_t l = 0; l < cycle.size(); ++l) {
      first[l] = next_slot[cycle[l]];
      next_slot[cycle[l]] += share;
    }
    for (std::size_t t = 0; t < share; ++t) {
      for (std::size_t l = 0; l + 1 < cycle.size(); ++l) {
        gf2::BitVector row(width);
        row.set(subsymbol_column(cycle[l], first[l] + t, slots_per_vertex), true);
        row.set(subsymbol_column(cycle[l + 1], first[l + 1] + t, slots_per_vertex), true);
        rows.append_row(std::move(row));
      }
    }
  }
  for (Vertex v = 0; v < g.n(); ++v) {
    for (std::size_t s = next_slot[v]; s < slots_per_vertex; ++s) {
      rows.append_row(gf2::BitVector::unit(width, subsymbol_column(v, s, slots_per_vertex)));
    }
  }
  return IndexCode(g.n(), slots_per_vertex, std::move(rows));
}

namespace {

// Depth-first search over fitting matrices, one row at a time. Rows already
// fixed are kept in echelon form; since rank never drops as rows are added,
// a branch is abandoned once its partial rank reaches the incumbent.
class MinrankSearch {
 public:
  explicit MinrankSearch(const SideInfoDigraph& g) : g_(g), best_(g.n()) {}

  std::size_t run() {
    std::vector<std::pair<gf2::BitVector, std::size_t>> basis;
    descend(0, basis);
    return best_;
  }

 private:
  void descend(Vertex row_index, std::vector<std::pair<gf2::BitVector, std::size_t>>& basis) {
    if (basis.size() >= best_) return;
    if (row_index == g_.n()) {
      best_ = basis.size();
      return;
    }
    const auto& free = g_.side_info(row_index);
    gf2::BitVector row = gf2::BitVector::unit(g_.n(), row_index);
    // Gray-code walk: step s flips the free entry at the lowest set bit of s.
    const std::uint64_t count = std::uint64_t{1} << free.size();
    for (std::uint64_t step = 0; step < count; ++step) {
      if (step > 0) row.flip(free[static_cast<std::size_t>(std::countr_zero(step))]);
      gf2::BitVector residual = row;
      for (const auto& [vec, pivot] : basis) {
        if (residual.get(pivot)) residual ^= vec;
      }
      if (residual.is_zero()) {
        descend(row_index + 1, basis);
      } else {
        basis.emplace_back(residual, residual.first_set());
        descend(row_index + 1, basis);
        basis.pop_back();
      }
      // A rank-1 fitting matrix cannot be beaten when n > 0.
      if (best_ <= 1) return;
    }
  }

  const SideInfoDigraph& g_;
  std::size_t best_;
};

}  // namespace

std::size_t minrank_bruteforce(const SideInfoDigraph& g, std::size_t free_limit) {
  if (g.edge_count() > free_limit) {
    throw SizeLimitExceeded("minrank search limited to " + std::to_string(free_limit) + " free entries, graph has " +
                            std::to_string(g.edge_count()));
  }
  if (g.n() == 0) return 0;
  return MinrankSearch(g).run();
}

std::size_t optimal_scalar_dim_subspace_search(const SideInfoDigraph& g) {
  if (g.n() > 4) throw SizeLimitExceeded("subspace search oracle limited to n <= 4");
  for (std::size_t k = 0; k <= g.n(); ++k) {
    for (auto& basis : gf2::enumerate_subspaces(g.n(), k)) {
      if (validate_index_code(IndexCode(g.n(), 1, std::move(basis)), g).valid) return k;
    }
  }
  throw std::logic_error("uncoded transmission must be a valid index code");
}

}  // namespace icdual
