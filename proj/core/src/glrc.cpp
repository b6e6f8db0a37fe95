#include "icdual/glrc.hpp"

#include <string>

#include "icdual/error.hpp"

namespace icdual {

Glrc::Glrc(std::size_t n, std::size_t p, gf2::BitMatrix generator) : n_(n), p_(p), generator_(std::move(generator)) {
  if (p_ == 0) throw InvalidInput("subsymbols per supersymbol must be positive");
  if (generator_.cols() != n_ * p_) {
    throw InvalidInput("GLRC generator has " + std::to_string(generator_.cols()) + " columns, expected n*p = " +
                       std::to_string(n_ * p_));
  }
  if (gf2::rank(generator_) != generator_.rows()) throw InvalidInput("GLRC generator rows are linearly dependent");
}

Rational Glrc::normalized_rate() const {
  return Rational(static_cast<std::int64_t>(k()), static_cast<std::int64_t>(p_));
}

GlrcVerdict validate_glrc(const Glrc& code, const SideInfoDigraph& g) {
  if (g.n() != code.n()) {
    throw DimensionMismatch("GLRC has " + std::to_string(code.n()) + " supersymbols, graph has " +
                            std::to_string(g.n()) + " vertices");
  }
  const std::size_t p = code.p();
  const auto& gen = code.generator();

  GlrcVerdict verdict;
  for (Vertex symbol = 0; symbol < code.n(); ++symbol) {
    std::vector<std::size_t> allowed;
    std::vector<gf2::BitVector> columns;
    for (Vertex a : g.side_info(symbol)) {
      for (std::size_t b = 0; b < p; ++b) {
        allowed.push_back(subsymbol_column(a, b, p));
        columns.push_back(gen.column(allowed.back()));
      }
    }
    for (std::size_t slot = 0; slot < p; ++slot) {
      const auto coeffs = gf2::express(columns, gen.column(subsymbol_column(symbol, slot, p)));
      if (!coeffs) {
        verdict.first_failure = {symbol, slot};
        verdict.witnesses.clear();
        return verdict;
      }
      RecoveryWitness w{symbol, slot, {}};
      for (std::size_t t = 0; t < allowed.size(); ++t) {
        if (coeffs->get(t)) w.source_columns.push_back(allowed[t]);
      }
      verdict.witnesses.push_back(std::move(w));
    }
  }
  verdict.valid = true;
  return verdict;
}

bool apply_witness(const RecoveryWitness& w, const gf2::BitVector& codeword) {
  bool value = false;
  for (auto c : w.source_columns) value ^= codeword.get(c);
  return value;
}

gf2::BitMatrix dualize(const gf2::BitMatrix& generator) { return gf2::nullspace_basis(generator).basis(); }

Glrc dual_glrc(const IndexCode& code) { return Glrc(code.n(), code.p(), dualize(code.generator())); }

IndexCode dual_index_code(const Glrc& code) { return IndexCode(code.n(), code.p(), dualize(code.generator())); }

std::size_t max_scalar_glrc_dim(const SideInfoDigraph& g) {
  if (g.n() > 4) throw SizeLimitExceeded("GLRC subspace oracle limited to n <= 4");
  for (std::size_t k = g.n() + 1; k-- > 0;) {
    for (auto& basis : gf2::enumerate_subspaces(g.n(), k)) {
      if (validate_glrc(Glrc(g.n(), 1, std::move(basis)), g).valid) return k;
    }
  }
  throw std::logic_error("the zero code must be a valid GLRC");
}

}  // namespace icdual
