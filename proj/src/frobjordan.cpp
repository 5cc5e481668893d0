#include "addpoly/frobjordan.hpp"

#include <algorithm>

#include "addpoly/error.hpp"

namespace addpoly {

std::vector<std::size_t> EigenData::orders() const {
  std::vector<std::size_t> out;
  for (std::size_t j = lambdas.size(); j > 0; --j) out.insert(out.end(), lambdas[j - 1], j);
  return out;
}

Signature EigenData::signature() const { return Signature{static_cast<std::size_t>(u.degree()), lambdas}; }

Species RationalJordanForm::species() const {
  std::vector<Signature> sigs;
  for (const auto& e : eigen) sigs.push_back(e.signature());
  return Species(std::move(sigs));
}

std::size_t RationalJordanForm::dimension() const { return species().dimension(); }

std::vector<std::size_t> nullity_sequence(const AdditivePoly& f, const UPoly& u, std::size_t k) {
  const FieldTower& T = f.tower();
  std::vector<std::size_t> nu{0};
  UPoly power = u;
  for (std::size_t j = 1; j <= k + 1; ++j) {
    const AdditivePoly h = gcrc(f, tau_inv(T, power));
    nu.push_back(static_cast<std::size_t>(h.exponent()));
    if (j <= k) power = power * u;
  }
  if (nu[1] == 0) throw InputError("nullity_sequence: " + to_string(u) + " is not an eigenfactor");
  for (std::size_t j = 1; j < nu.size(); ++j) {
    if (nu[j] < nu[j - 1]) throw InternalInconsistency("nullity sequence decreases");
  }
  return nu;
}

std::vector<std::size_t> lambdas_from_nullities(const std::vector<std::size_t>& nu, std::size_t m) {
  if (nu.size() < 2 || m == 0) throw InputError("lambdas_from_nullities: need nu_0..nu_{k+1} and m >= 1");
  std::vector<std::size_t> out;
  for (std::size_t j = 1; j + 1 < nu.size(); ++j) {
    const long v = 2 * static_cast<long>(nu[j]) - static_cast<long>(nu[j - 1]) - static_cast<long>(nu[j + 1]);
    if (v < 0 || v % static_cast<long>(m) != 0) {
      throw InternalInconsistency("block count at order " + std::to_string(j) + " is not a nonnegative multiple of " +
                                  std::to_string(m));
    }
    out.push_back(static_cast<std::size_t>(v / static_cast<long>(m)));
  }
  trim_trailing_zeros(out);
  return out;
}

RationalJordanForm rational_jordan_form(const AdditivePoly& f, std::uint64_t seed) {
  if (!f.is_monic() || !f.is_squarefree()) throw InputError("rational_jordan_form needs a monic squarefree polynomial");
  if (f.exponent() < 1) throw InputError("rational_jordan_form needs exponent at least 1");
  RationalJordanForm J{{}, tau(mclc(f))};
  for (auto& [u, k] : factor(J.minpoly, seed)) {
    EigenData d{u, k, nullity_sequence(f, u, k), {}};
    d.lambdas = lambdas_from_nullities(d.nullities, static_cast<std::size_t>(u.degree()));
    if (d.lambdas.size() != k) throw InternalInconsistency("largest block order differs from the multiplicity");
    J.eigen.push_back(std::move(d));
  }
  if (J.dimension() != static_cast<std::size_t>(f.exponent())) {
    throw InternalInconsistency("species dimension " + std::to_string(J.dimension()) + " differs from exponent " +
                                std::to_string(f.exponent()));
  }
  return J;
}

Matrix companion_matrix(const UPoly& u) {
  if (u.degree() < 1 || !u.is_monic()) throw InputError("companion matrix needs a monic polynomial of degree >= 1");
  const Field& F = u.field();
  const auto m = static_cast<std::size_t>(u.degree());
  Matrix c(F, m, m);
  for (std::size_t i = 1; i < m; ++i) c.set(i, i - 1, F.one());
  for (std::size_t i = 0; i < m; ++i) c.set(i, m - 1, F.neg(u.coeff(i)));
  return c;
}

Matrix jordan_block(const UPoly& u, std::size_t order) {
  const Field& F = u.field();
  const Matrix c = companion_matrix(u);
  const std::size_t m = c.rows();
  Matrix J(F, m * order, m * order);
  for (std::size_t b = 0; b < order; ++b) {
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) J.set(b * m + i, b * m + j, c.at(i, j));
    if (b + 1 < order) {
      for (std::size_t i = 0; i < m; ++i) J.set(b * m + i, (b + 1) * m + i, F.one());
    }
  }
  return J;
}

Matrix block_diagonal(const Field& F, const std::vector<Matrix>& blocks) {
  std::size_t n = 0;
  for (const auto& b : blocks) n += b.rows();
  Matrix out(F, n, n);
  std::size_t off = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) out.set(off + i, off + j, b.at(i, j));
    off += b.rows();
  }
  return out;
}

Matrix block_matrix(const RationalJordanForm& J) {
  const Field F = J.minpoly.field();
  std::vector<Matrix> blocks;
  for (const auto& e : J.eigen)
    for (std::size_t order : e.orders()) blocks.push_back(jordan_block(e.u, order));
  return block_diagonal(F, blocks);
}

std::vector<UPoly> monic_irreducibles(const Field& F, std::size_t m, std::size_t limit) {
  std::vector<UPoly> out;
  const auto card = F.cardinality();
  if (!card) throw BudgetExceeded("field too large to enumerate polynomials");
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < m; ++i) {
    if (total > (std::uint64_t{1} << 40) / *card) throw BudgetExceeded("too many candidate polynomials");
    total *= *card;
  }
  for (std::uint64_t code = 0; code < total; ++code) {
    std::vector<Element> c;
    std::uint64_t x = code;
    for (std::size_t i = 0; i < m; ++i) {
      c.push_back(F.element(x % *card));
      x /= *card;
    }
    c.push_back(F.one());
    UPoly u(F, std::move(c));
    if (is_irreducible(u)) out.push_back(std::move(u));
  }
  std::sort(out.begin(), out.end(), canonical_less);
  if (out.size() > limit) out.erase(out.begin() + static_cast<long>(limit), out.end());
  return out;
}

Matrix realize_species(const Species& s, const Field& F) {
  std::vector<std::size_t> used_per_degree;
  std::vector<Matrix> blocks;
  for (const auto& sig : s.entries()) {
    if (used_per_degree.size() <= sig.m) used_per_degree.resize(sig.m + 1, 0);
    const std::size_t idx = used_per_degree[sig.m]++;
    auto us = monic_irreducibles(F, sig.m, idx + 1);
    if (us.size() <= idx) throw InputError("not enough irreducibles of degree " + std::to_string(sig.m));
    for (std::size_t j = sig.lambdas.size(); j > 0; --j)
      for (std::size_t c = 0; c < sig.lambdas[j - 1]; ++c) blocks.push_back(jordan_block(us[idx], j));
  }
  return block_diagonal(F, blocks);
}

}  // namespace addpoly
