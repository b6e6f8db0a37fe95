#include "icdual/random_codes.hpp"

#include "icdual/error.hpp"

namespace icdual::random {

SideInfoDigraph digraph(std::size_t n, double density, Engine& rng) {
  std::bernoulli_distribution coin(density);
  std::vector<std::vector<Vertex>> sets(n);
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = 0; j < n; ++j) {
      if (i != j && coin(rng)) sets[i].push_back(j);
    }
  }
  return SideInfoDigraph::from_side_info(n, std::move(sets));
}

SideInfoDigraph digraph_from_mask(std::size_t n, std::uint64_t mask) {
  if (n * (n - (n > 0 ? 1 : 0)) > 64) throw SizeLimitExceeded("arc mask wider than 64 bits");
  std::vector<std::vector<Vertex>> sets(n);
  std::size_t bit = 0;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = 0; j < n; ++j) {
      if (i == j) continue;
      if ((mask >> bit) & 1u) sets[i].push_back(j);
      ++bit;
    }
  }
  return SideInfoDigraph::from_side_info(n, std::move(sets));
}

gf2::BitVector bits(std::size_t size, Engine& rng) {
  gf2::BitVector v(size);
  for (std::size_t i = 0; i < size; ++i) v.set(i, rng() & 1u);
  return v;
}

gf2::BitMatrix full_rank_matrix(std::size_t k, std::size_t cols, Engine& rng) {
  if (k > cols) throw InvalidInput("cannot draw a full-rank matrix with more rows than columns");
  while (true) {
    gf2::BitMatrix m(0, cols);
    for (std::size_t r = 0; r < k; ++r) m.append_row(bits(cols, rng));
    if (gf2::rank(m) == k) return m;
  }
}

gf2::BitMatrix fitting_matrix(const SideInfoDigraph& g, std::size_t p, Engine& rng) {
  const std::size_t width = g.n() * p;
  gf2::BitMatrix m(0, width);
  for (Vertex i = 0; i < g.n(); ++i) {
    for (std::size_t j = 0; j < p; ++j) {
      auto row = gf2::BitVector::unit(width, subsymbol_column(i, j, p));
      for (Vertex a : g.side_info(i)) {
        for (std::size_t b = 0; b < p; ++b) row.set(subsymbol_column(a, b, p), rng() & 1u);
      }
      m.append_row(std::move(row));
    }
  }
  return m;
}

IndexCode valid_index_code(const SideInfoDigraph& g, std::size_t p, Engine& rng) {
  auto rows = fitting_matrix(g, p, rng);
  if (rng() & 1u) {
    const auto extra = static_cast<std::size_t>(rng() % 3);
    for (std::size_t t = 0; t < extra; ++t) rows.append_row(bits(g.n() * p, rng));
  }
  return IndexCode(g.n(), p, gf2::reduce(rows).reduced);
}

Glrc valid_glrc(const SideInfoDigraph& g, std::size_t p, Engine& rng) {
  const auto repair_space = gf2::nullspace_basis(fitting_matrix(g, p, rng));
  const std::size_t available = repair_space.dim();
  const auto dim = static_cast<std::size_t>(rng() % (available + 1));
  if (dim == 0) return Glrc(g.n(), p, gf2::BitMatrix(0, g.n() * p));
  const auto mix = full_rank_matrix(dim, available, rng);
  return Glrc(g.n(), p, mix.multiply(repair_space.basis()));
}

}  // namespace icdual::random
