#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "icdual/digraph.hpp"
#include "icdual/gf2.hpp"
#include "icdual/index_code.hpp"
#include "icdual/rational.hpp"

namespace icdual {

/// Generalized locally repairable code: a k-dimensional subspace of
/// GF(2)^(n·p) whose n supersymbols each have p subsymbols. Columns of the
/// generator are g_{i,j} in supersymbol-major order.
class Glrc {
 public:
  /// Throws InvalidInput when p == 0, the shape is not k × (n·p), or rows are dependent.
  Glrc(std::size_t n, std::size_t p, gf2::BitMatrix generator);

  [[nodiscard]] std::size_t n() const noexcept { return n_; }
  [[nodiscard]] std::size_t p() const noexcept { return p_; }
  [[nodiscard]] std::size_t k() const noexcept { return generator_.rows(); }
  [[nodiscard]] const gf2::BitMatrix& generator() const noexcept { return generator_; }

  /// k / p.
  [[nodiscard]] Rational normalized_rate() const;

  /// Codeword uᵀ G for a message u of length k.
  [[nodiscard]] gf2::BitVector encode(const gf2::BitVector& message) const { return generator_.left_multiply(message); }

 private:
  std::size_t n_;
  std::size_t p_;
  gf2::BitMatrix generator_;
};

/// Repair rule for one subsymbol: z[symbol, slot] is the XOR of the listed
/// codeword columns, all belonging to supersymbols in S_symbol.
struct RecoveryWitness {
  std::size_t symbol = 0;
  std::size_t slot = 0;
  std::vector<std::size_t> source_columns;
};

struct GlrcVerdict {
  bool valid = false;
  std::vector<RecoveryWitness> witnesses;
  std::optional<std::pair<std::size_t, std::size_t>> first_failure;  // (symbol, slot)
};

/// Every column g_{i,j} must lie in the span of the columns of the supersymbols
/// in S_i; an empty S_i forces zero columns. Throws DimensionMismatch when
/// g.n() != code.n().
[[nodiscard]] GlrcVerdict validate_glrc(const Glrc& code, const SideInfoDigraph& g);

/// Recomputes one subsymbol of a codeword from the columns its witness names.
[[nodiscard]] bool apply_witness(const RecoveryWitness& w, const gf2::BitVector& codeword);

/// Full-row-rank basis (canonical RREF) of the dual code {z : M zᵀ = 0}.
[[nodiscard]] gf2::BitMatrix dualize(const gf2::BitMatrix& generator);

/// The dual of an index code read as a GLRC on the same graph, and back.
[[nodiscard]] Glrc dual_glrc(const IndexCode& code);
[[nodiscard]] IndexCode dual_index_code(const Glrc& code);

/// Largest k such that some k-dimensional subspace of GF(2)^n is a valid scalar
/// GLRC on g, by enumeration. Requires n ≤ 4 (SizeLimitExceeded otherwise).
[[nodiscard]] std::size_t max_scalar_glrc_dim(const SideInfoDigraph& g);

}  // namespace icdual
