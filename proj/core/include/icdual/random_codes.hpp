#pragma once

// Seeded generators for property sweeps. Every generator draws only from the
// engine it is given, so a sweep is reproducible from its seed.

#include <cstddef>
#include <random>

#include "icdual/digraph.hpp"
#include "icdual/gf2.hpp"
#include "icdual/glrc.hpp"
#include "icdual/index_code.hpp"

namespace icdual::random {

using Engine = std::mt19937_64;

/// Each of the n(n−1) possible arcs present independently with probability `density`.
[[nodiscard]] SideInfoDigraph digraph(std::size_t n, double density, Engine& rng);

/// The digraph on n vertices whose arc set is the bit pattern `mask`, arcs
/// ordered (0,1), (0,2), …, (n−1,n−2). Covers all 2^(n(n−1)) digraphs.
[[nodiscard]] SideInfoDigraph digraph_from_mask(std::size_t n, std::uint64_t mask);

[[nodiscard]] gf2::BitVector bits(std::size_t size, Engine& rng);

/// Uniform full-row-rank k × cols matrix (rejection sampling).
[[nodiscard]] gf2::BitMatrix full_rank_matrix(std::size_t k, std::size_t cols, Engine& rng);

/// Random (n·p) × (n·p) block fitting matrix: row (i, j) is the unit vector of
/// subsymbol (i, j) plus random entries on the columns of supersymbols in S_i.
[[nodiscard]] gf2::BitMatrix fitting_matrix(const SideInfoDigraph& g, std::size_t p, Engine& rng);

/// Valid index code: row space of a random fitting matrix, plus with
/// probability 1/2 a few random extra rows (supersets of valid codes stay valid).
[[nodiscard]] IndexCode valid_index_code(const SideInfoDigraph& g, std::size_t p, Engine& rng);

/// Valid GLRC: a random subspace of the code fixed by random local repair
/// rules, i.e. { z : z_(i,j) = Σ A_i z_(S_i) } for random A_i. Rank-deficient
/// draws of the subspace are rejected and redrawn.
[[nodiscard]] Glrc valid_glrc(const SideInfoDigraph& g, std::size_t p, Engine& rng);

}  // namespace icdual::random
