#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "icdual/digraph.hpp"
#include "icdual/gf2.hpp"
#include "icdual/packing.hpp"
#include "icdual/rational.hpp"

namespace icdual {

/// Column of subsymbol `slot` of supersymbol `symbol` in a supersymbol-major layout.
[[nodiscard]] constexpr std::size_t subsymbol_column(std::size_t symbol, std::size_t slot, std::size_t p) {
  return symbol * p + slot;
}

/// Vector-linear index code: k broadcast rows over n messages of p subsymbols.
/// The generator must have full row rank.
class IndexCode {
 public:
  /// Throws InvalidInput when p == 0, the generator is not k × (n·p), or its
  /// rows are linearly dependent.
  IndexCode(std::size_t n, std::size_t p, gf2::BitMatrix generator);

  [[nodiscard]] std::size_t n() const noexcept { return n_; }
  [[nodiscard]] std::size_t p() const noexcept { return p_; }
  [[nodiscard]] std::size_t k() const noexcept { return generator_.rows(); }
  [[nodiscard]] const gf2::BitMatrix& generator() const noexcept { return generator_; }

  /// k / p transmissions per message length.
  [[nodiscard]] Rational broadcast_rate() const;
  /// n − k / p: transmissions saved against uncoded broadcast.
  [[nodiscard]] Rational complementary_rate() const;

  /// y = V x.
  [[nodiscard]] gf2::BitVector encode(const gf2::BitVector& messages) const { return generator_.multiply(messages); }

 private:
  std::size_t n_;
  std::size_t p_;
  gf2::BitMatrix generator_;
};

/// Linear decoder for one subsymbol: x[user, slot] is the XOR of the selected
/// transmissions and the selected side-information subsymbols.
struct DecodingWitness {
  std::size_t user = 0;
  std::size_t slot = 0;
  gf2::BitVector transmissions;             // length k
  std::vector<std::size_t> side_columns;    // message columns read from S_user
};

struct IndexCodeVerdict {
  bool valid = false;
  std::vector<DecodingWitness> witnesses;   // one per (user, slot) when valid
  std::optional<std::pair<std::size_t, std::size_t>> first_failure;  // (user, slot)
};

/// Checks that every user recovers each of its p subsymbols linearly from the
/// broadcast and its side information. Throws DimensionMismatch when g.n() != code.n().
[[nodiscard]] IndexCodeVerdict validate_index_code(const IndexCode& code, const SideInfoDigraph& g);

/// Applies a witness to a received broadcast y and full message vector x
/// (only side-information columns of x are read).
[[nodiscard]] bool apply_witness(const DecodingWitness& w, const gf2::BitVector& broadcast,
                                 const gf2::BitVector& messages);

/// Achievable code from a feasible packing. With p the lcm of the weight
/// denominators, each cycle gets weight·p private subsymbol slots at each of
/// its vertices and transmits the chain sums x_{u0}+x_{u1}, …, x_{u(L-2)}+x_{u(L-1)}
/// per slot; every unowned slot goes out uncoded. Saves exactly p·value
/// transmissions. Throws InvalidInput on an infeasible packing.
[[nodiscard]] IndexCode construct_from_packing(const CyclePacking& packing, const SideInfoDigraph& g);

inline constexpr std::size_t kDefaultMinrankFreeLimit = 24;

/// Minimum rank over GF(2) of matrices fitting g (unit diagonal, free entries on
/// arcs, zero elsewhere): the optimal scalar linear index code length.
/// Throws SizeLimitExceeded when the number of arcs exceeds `free_limit`.
[[nodiscard]] std::size_t minrank_bruteforce(const SideInfoDigraph& g,
                                             std::size_t free_limit = kDefaultMinrankFreeLimit);

/// Smallest k for which some k-dimensional subspace of GF(2)^n is a valid
/// scalar index code, by enumerating subspaces. Independent cross-check of
/// minrank. Requires n ≤ 4 (SizeLimitExceeded otherwise).
[[nodiscard]] std::size_t optimal_scalar_dim_subspace_search(const SideInfoDigraph& g);

}  // namespace icdual
