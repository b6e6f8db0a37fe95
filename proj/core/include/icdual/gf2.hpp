#pragma once

// Dense linear algebra over GF(2).
//
// Vectors and matrices are bit-packed into 64-bit words. Matrices are stored
// row-major; every operation is a pure function of its arguments.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace icdual::gf2 {

class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t size);

  /// Parses a string of '0'/'1' characters; throws InvalidInput otherwise.
  static BitVector from_string(std::string_view bits);
  static BitVector unit(std::size_t size, std::size_t index);

  [[nodiscard]] std::size_t size() const noexcept { return size_; }
  [[nodiscard]] bool get(std::size_t i) const noexcept {
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }
  void set(std::size_t i, bool value) noexcept {
    const std::uint64_t mask = std::uint64_t{1} << (i & 63);
    if (value) {
      words_[i >> 6] |= mask;
    } else {
      words_[i >> 6] &= ~mask;
    }
  }
  void flip(std::size_t i) noexcept { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

  BitVector& operator^=(const BitVector& other);
  friend BitVector operator^(BitVector lhs, const BitVector& rhs) { return lhs ^= rhs; }

  /// Inner product over GF(2).
  [[nodiscard]] bool dot(const BitVector& other) const;
  [[nodiscard]] bool is_zero() const noexcept;
  [[nodiscard]] std::size_t weight() const noexcept;
  /// Index of the lowest set bit, or size() when zero.
  [[nodiscard]] std::size_t first_set() const noexcept;
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const BitVector&, const BitVector&) = default;
  /// Lexicographic order on the bit string (index 0 most significant).
  friend bool operator<(const BitVector& a, const BitVector& b);

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols);

  /// Every row must have length `cols`.
  static BitMatrix from_rows(std::size_t cols, std::vector<BitVector> rows);
  static BitMatrix from_strings(std::size_t cols, std::span<const std::string> rows);
  static BitMatrix identity(std::size_t n);

  [[nodiscard]] std::size_t rows() const noexcept { return data_.size(); }
  [[nodiscard]] std::size_t cols() const noexcept { return cols_; }

  [[nodiscard]] bool get(std::size_t r, std::size_t c) const noexcept { return data_[r].get(c); }
  void set(std::size_t r, std::size_t c, bool value) noexcept { data_[r].set(c, value); }

  [[nodiscard]] const BitVector& row(std::size_t r) const { return data_[r]; }
  BitVector& row(std::size_t r) { return data_[r]; }
  [[nodiscard]] const std::vector<BitVector>& row_list() const noexcept { return data_; }

  void append_row(BitVector row);
  [[nodiscard]] BitVector column(std::size_t c) const;
  /// Submatrix made of the listed columns, in the given order.
  [[nodiscard]] BitMatrix select_columns(std::span<const std::size_t> cols) const;
  [[nodiscard]] BitMatrix transpose() const;

  /// this * x for a column vector x of length cols().
  [[nodiscard]] BitVector multiply(const BitVector& x) const;
  /// xᵀ * this for a row vector x of length rows().
  [[nodiscard]] BitVector left_multiply(const BitVector& x) const;
  [[nodiscard]] BitMatrix multiply(const BitMatrix& rhs) const;

  [[nodiscard]] std::vector<std::string> to_strings() const;

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  std::size_t cols_ = 0;
  std::vector<BitVector> data_;
};

/// Reduced row-echelon form together with the pivot column of each nonzero row.
struct Echelon {
  BitMatrix reduced;  // zero rows removed
  std::vector<std::size_t> pivots;
};

[[nodiscard]] Echelon reduce(const BitMatrix& m);
[[nodiscard]] std::size_t rank(const BitMatrix& m);

/// A subspace of GF(2)^ambient_dim held by its canonical RREF basis, so two
/// subspaces are equal exactly when their bases are bit-identical.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient_dim = 0);

  /// Row space of `generators`.
  static Subspace span_of(const BitMatrix& generators);

  [[nodiscard]] std::size_t ambient_dim() const noexcept { return ambient_dim_; }
  [[nodiscard]] std::size_t dim() const noexcept { return basis_.rows(); }
  [[nodiscard]] const BitMatrix& basis() const noexcept { return basis_; }
  [[nodiscard]] const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  [[nodiscard]] bool contains(const BitVector& v) const;
  /// Elements of the subspace, in no particular order. Requires dim() < 32.
  [[nodiscard]] std::vector<BitVector> elements() const;

  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  std::size_t ambient_dim_;
  BitMatrix basis_;
  std::vector<std::size_t> pivots_;
};

/// Right null space { z : m zᵀ = 0 }.
[[nodiscard]] Subspace nullspace_basis(const BitMatrix& m);

/// Coefficients over s.basis() rows expressing v, or nullopt when v ∉ s.
/// Throws DimensionMismatch when v.size() != s.ambient_dim().
[[nodiscard]] std::optional<BitVector> in_span(const BitVector& v, const Subspace& s);

[[nodiscard]] Subspace sum(const Subspace& a, const Subspace& b);
[[nodiscard]] std::size_t intersection_dim(const Subspace& a, const Subspace& b);

/// Some w with a·w = b, free variables zero; nullopt when inconsistent.
[[nodiscard]] std::optional<BitVector> solve(const BitMatrix& a, const BitVector& b);

/// Coefficients c with Σ c_r generators[r] = target, or nullopt.
[[nodiscard]] std::optional<BitVector> express(std::span<const BitVector> generators,
                                               const BitVector& target);

/// Canonical bases of every dim-dimensional subspace of GF(2)^ambient_dim,
/// one RREF matrix per subspace. Intended for exhaustive oracles on tiny spaces.
[[nodiscard]] std::vector<BitMatrix> enumerate_subspaces(std::size_t ambient_dim, std::size_t dim);

}  // namespace icdual::gf2
