#include "icdual/gf2.hpp"

#include <algorithm>
#include <bit>
#include <utility>

#include "icdual/error.hpp"

namespace icdual::gf2 {
namespace {

constexpr std::size_t word_count(std::size_t bits) { return (bits + 63) / 64; }

void require_same_size(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw DimensionMismatch(std::string(what) + ": " + std::to_string(a) + " vs " + std::to_string(b));
  }
}

}  // namespace

BitVector::BitVector(std::size_t size) : size_(size), words_(word_count(size), 0) {}

BitVector BitVector::from_string(std::string_view bits) {
  BitVector v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      v.set(i, true);
    } else if (bits[i] != '0') {
      throw InvalidInput("bit string contains '" + std::string(1, bits[i]) + "'");
    }
  }
  return v;
}

BitVector BitVector::unit(std::size_t size, std::size_t index) {
  BitVector v(size);
  v.set(index, true);
  return v;
}

BitVector& BitVector::operator^=(const BitVector& other) {
  require_same_size(size_, other.size_, "xor");
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
  return *this;
}

bool BitVector::dot(const BitVector& other) const {
  require_same_size(size_, other.size_, "dot");
  std::uint64_t acc = 0;
  for (std::size_t w = 0; w < words_.size(); ++w) acc ^= words_[w] & other.words_[w];
  return std::popcount(acc) & 1;
}

bool BitVector::is_zero() const noexcept {
  for (auto w : words_) {
    if (w != 0) return false;
  }
  return true;
}

std::size_t BitVector::weight() const noexcept {
  std::size_t total = 0;
  for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

std::size_t BitVector::first_set() const noexcept {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] != 0) return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
  }
  return size_;
}

std::string BitVector::to_string() const {
  std::string s(size_, '0');
  for (std::size_t i = 0; i < size_; ++i) {
    if (get(i)) s[i] = '1';
  }
  return s;
}

bool operator<(const BitVector& a, const BitVector& b) {
  const std::size_t common = std::min(a.size_, b.size_);
  for (std::size_t i = 0; i < common; ++i) {
    if (a.get(i) != b.get(i)) return b.get(i);
  }
  return a.size_ < b.size_;
}

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols) : cols_(cols), data_(rows, BitVector(cols)) {}

BitMatrix BitMatrix::from_rows(std::size_t cols, std::vector<BitVector> rows) {
  for (const auto& r : rows) require_same_size(r.size(), cols, "matrix row length");
  BitMatrix m;
  m.cols_ = cols;
  m.data_ = std::move(rows);
  return m;
}

BitMatrix BitMatrix::from_strings(std::size_t cols, std::span<const std::string> rows) {
  std::vector<BitVector> parsed;
  parsed.reserve(rows.size());
  for (const auto& r : rows) parsed.push_back(BitVector::from_string(r));
  return from_rows(cols, std::move(parsed));
}

BitMatrix BitMatrix::identity(std::size_t n) {
  BitMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

void BitMatrix::append_row(BitVector row) {
  require_same_size(row.size(), cols_, "matrix row length");
  data_.push_back(std::move(row));
}

BitVector BitMatrix::column(std::size_t c) const {
  BitVector v(rows());
  for (std::size_t r = 0; r < rows(); ++r) v.set(r, get(r, c));
  return v;
}

BitMatrix BitMatrix::select_columns(std::span<const std::size_t> cols) const {
  BitMatrix out(rows(), cols.size());
  for (std::size_t r = 0; r < rows(); ++r) {
    for (std::size_t j = 0; j < cols.size(); ++j) out.set(r, j, get(r, cols[j]));
  }
  return out;
}

BitMatrix BitMatrix::transpose() const {
  BitMatrix t(cols_, rows());
  for (std::size_t r = 0; r < rows(); ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (get(r, c)) t.set(c, r, true);
    }
  }
  return t;
}

BitVector BitMatrix::multiply(const BitVector& x) const {
  require_same_size(x.size(), cols_, "matrix-vector product");
  BitVector y(rows());
  for (std::size_t r = 0; r < rows(); ++r) y.set(r, data_[r].dot(x));
  return y;
}

BitVector BitMatrix::left_multiply(const BitVector& x) const {
  require_same_size(x.size(), rows(), "vector-matrix product");
  BitVector y(cols_);
  for (std::size_t r = 0; r < rows(); ++r) {
    if (x.get(r)) y ^= data_[r];
  }
  return y;
}

BitMatrix BitMatrix::multiply(const BitMatrix& rhs) const {
  require_same_size(cols_, rhs.rows(), "matrix product");
  BitMatrix out(rows(), rhs.cols());
  for (std::size_t r = 0; r < rows(); ++r) out.data_[r] = rhs.left_multiply(data_[r]);
  return out;
}

std::vector<std::string> BitMatrix::to_strings() const {
  std::vector<std::string> out;
  out.reserve(rows());
  for (const auto& r : data_) out.push_back(r.to_string());
  return out;
}

Echelon reduce(const BitMatrix& m) {
  std::vector<BitVector> rows = m.row_list();
  std::vector<std::size_t> pivots;
  std::size_t next = 0;
  for (std::size_t c = 0; c < m.cols() && next < rows.size(); ++c) {
    std::size_t p = next;
    while (p < rows.size() && !rows[p].get(c)) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[next], rows[p]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != next && rows[r].get(c)) rows[r] ^= rows[next];
    }
    pivots.push_back(c);
    ++next;
  }
  rows.resize(next);
  return {BitMatrix::from_rows(m.cols(), std::move(rows)), std::move(pivots)};
}

std::size_t rank(const BitMatrix& m) { return reduce(m).pivots.size(); }

Subspace::Subspace(std::size_t ambient_dim) : ambient_dim_(ambient_dim), basis_(0, ambient_dim) {}

Subspace Subspace::span_of(const BitMatrix& generators) {
  Subspace s(generators.cols());
  auto ech = reduce(generators);
  s.basis_ = std::move(ech.reduced);
  s.pivots_ = std::move(ech.pivots);
  return s;
}

bool Subspace::contains(const BitVector& v) const { return in_span(v, *this).has_value(); }

std::vector<BitVector> Subspace::elements() const {
  if (dim() >= 32) throw SizeLimitExceeded("subspace too large to enumerate");
  std::vector<BitVector> out;
  out.reserve(std::size_t{1} << dim());
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << dim()); ++mask) {
    BitVector v(ambient_dim_);
    for (std::size_t r = 0; r < dim(); ++r) {
      if ((mask >> r) & 1u) v ^= basis_.row(r);
    }
    out.push_back(std::move(v));
  }
  return out;
}

Subspace nullspace_basis(const BitMatrix& m) {
  const auto ech = reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : ech.pivots) is_pivot[p] = true;

  // One basis vector per free column f: set z_f = 1 and back-substitute the
  // pivot variables from the reduced rows.
  BitMatrix gens(0, m.cols());
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    BitVector z = BitVector::unit(m.cols(), f);
    for (std::size_t r = 0; r < ech.pivots.size(); ++r) {
      if (ech.reduced.get(r, f)) z.set(ech.pivots[r], true);
    }
    gens.append_row(std::move(z));
  }
  return Subspace::span_of(gens);
}

std::optional<BitVector> in_span(const BitVector& v, const Subspace& s) {
  require_same_size(v.size(), s.ambient_dim(), "in_span");
  BitVector coeffs(s.dim());
  BitVector residual = v;
  for (std::size_t r = 0; r < s.dim(); ++r) {
    if (residual.get(s.pivots()[r])) {
      coeffs.set(r, true);
      residual ^= s.basis().row(r);
    }
  }
  if (!residual.is_zero()) return std::nullopt;
  return coeffs;
}

Subspace sum(const Subspace& a, const Subspace& b) {
  require_same_size(a.ambient_dim(), b.ambient_dim(), "subspace sum");
  BitMatrix stacked = a.basis();
  for (const auto& r : b.basis().row_list()) stacked.append_row(r);
  return Subspace::span_of(stacked);
}

std::size_t intersection_dim(const Subspace& a, const Subspace& b) {
  return a.dim() + b.dim() - sum(a, b).dim();
}

std::optional<BitVector> solve(const BitMatrix& a, const BitVector& b) {
  require_same_size(b.size(), a.rows(), "solve right-hand side");
  const std::size_t n = a.cols();
  BitMatrix augmented(a.rows(), n + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < n; ++c) augmented.set(r, c, a.get(r, c));
    augmented.set(r, n, b.get(r));
  }
  const auto ech = reduce(augmented);
  BitVector w(n);
  for (std::size_t r = 0; r < ech.pivots.size(); ++r) {
    if (ech.pivots[r] == n) return std::nullopt;
    w.set(ech.pivots[r], ech.reduced.get(r, n));
  }
  return w;
}

std::optional<BitVector> express(std::span<const BitVector> generators, const BitVector& target) {
  for (const auto& g : generators) require_same_size(g.size(), target.size(), "express generator");
  BitMatrix columns(target.size(), generators.size());
  for (std::size_t j = 0; j < generators.size(); ++j) {
    for (std::size_t i = 0; i < target.size(); ++i) {
      if (generators[j].get(i)) columns.set(i, j, true);
    }
  }
  return solve(columns, target);
}

std::vector<BitMatrix> enumerate_subspaces(std::size_t ambient_dim, std::size_t dim) {
  std::vector<BitMatrix> out;
  if (dim > ambient_dim) return out;
  if (ambient_dim > 16) throw SizeLimitExceeded("subspace enumeration limited to ambient dimension 16");

  std::vector<std::size_t> pivots(dim);
  for (std::size_t i = 0; i < dim; ++i) pivots[i] = i;
  while (true) {
    std::vector<bool> is_pivot(ambient_dim, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::pair<std::size_t, std::size_t>> free;  // (row, col)
    for (std::size_t r = 0; r < dim; ++r) {
      for (std::size_t c = pivots[r] + 1; c < ambient_dim; ++c) {
        if (!is_pivot[c]) free.emplace_back(r, c);
      }
    }
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << free.size()); ++mask) {
      BitMatrix m(dim, ambient_dim);
      for (std::size_t r = 0; r < dim; ++r) m.set(r, pivots[r], true);
      for (std::size_t f = 0; f < free.size(); ++f) {
        if ((mask >> f) & 1u) m.set(free[f].first, free[f].second, true);
      }
      out.push_back(std::move(m));
    }
    std::size_t i = dim;
    while (i > 0 && pivots[i - 1] == ambient_dim - dim + i - 1) --i;
    if (i == 0) break;
    ++pivots[i - 1];
    for (std::size_t k = i; k < dim; ++k) pivots[k] = pivots[k - 1] + 1;
  }
  return out;
}

}  // namespace icdual::gf2
