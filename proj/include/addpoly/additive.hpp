#pragma once

// Additive polynomials sum a_i x^(r^i) with coefficients in F_q, i.e. the
// skew ring F_q[x; r] where x * a = a^r * x. Composition is the ring product.
// Nothing here ever expands to the dense degree-r^n form except expand(),
// pi_t() and rho_t(), which are gated by an explicit degree cap.

#include <cstdint>
#include <utility>
#include <vector>

#include "addpoly/ffield.hpp"
#include "addpoly/upoly.hpp"

namespace addpoly {

class AdditivePoly {
 public:
  explicit AdditivePoly(FieldTower tower) : tower_(std::move(tower)) {}
  /// Coefficients a_0..a_n at level q (lower levels are embedded).
  AdditivePoly(FieldTower tower, std::vector<Element> coeffs);

  /// x^(r^i)
  static AdditivePoly monomial(const FieldTower& tower, std::size_t i, const Element& c);
  static AdditivePoly identity(const FieldTower& tower) { return monomial(tower, 0, tower.q().one()); }

  const FieldTower& tower() const noexcept { return tower_; }
  Field field() const { return tower_.q(); }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// n with deg = r^n; -1 for zero.
  long exponent() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<Element>& coeffs() const noexcept { return coeffs_; }
  Element coeff(std::size_t i) const;
  const Element& leading() const;
  bool is_monic() const;
  bool is_squarefree() const;

  friend bool operator==(const AdditivePoly& a, const AdditivePoly& b) { return a.coeffs_ == b.coeffs_; }

 private:
  FieldTower tower_;
  std::vector<Element> coeffs_;
};

AdditivePoly operator+(const AdditivePoly& a, const AdditivePoly& b);
AdditivePoly operator-(const AdditivePoly& a, const AdditivePoly& b);
/// c * f (left scalar multiplication).
AdditivePoly scale(const Element& c, const AdditivePoly& f);
AdditivePoly make_monic(const AdditivePoly& f);

/// g o h
AdditivePoly compose(const AdditivePoly& g, const AdditivePoly& h);

struct SkewDivMod {
  AdditivePoly quotient;
  AdditivePoly remainder;
};
/// f = g o h + rem with expn(rem) < expn(h).
SkewDivMod right_divmod(const AdditivePoly& f, const AdditivePoly& h);
/// f = h o g + rem with expn(rem) < expn(h).
SkewDivMod left_divmod(const AdditivePoly& f, const AdditivePoly& h);

/// Monic greatest common right component.
AdditivePoly gcrc(const AdditivePoly& f, const AdditivePoly& g);

/// Coefficients in F_r and support on multiples of k = [F_q : F_r].
bool is_central(const AdditivePoly& f);

/// Minimal central left component f* = g o f.
AdditivePoly mclc(const AdditivePoly& f);

/// sum a_i x^(q^i) -> sum a_i y^i over F_r. Throws NotCentral.
UPoly tau(const AdditivePoly& c);
AdditivePoly tau_inv(const FieldTower& tower, const UPoly& u);

/// fbar = x^(r^m) o f with f squarefree.
std::pair<std::size_t, AdditivePoly> strip_inseparable(const AdditivePoly& fbar);

inline constexpr std::uint64_t kDefaultDenseCap = std::uint64_t{1} << 20;

/// pi_t(f) = sum a_i x^((r^i - 1)/t) over F_q; t must divide r - 1.
UPoly pi_t(const AdditivePoly& f, std::uint64_t t, std::uint64_t degree_cap = kDefaultDenseCap);
/// rho_t(f) = x * pi_t(f)^t.
UPoly rho_t(const AdditivePoly& f, std::uint64_t t, std::uint64_t degree_cap = kDefaultDenseCap);

/// Dense form sum a_i x^(r^i) over F_q.
UPoly expand(const AdditivePoly& f, std::uint64_t degree_cap = kDefaultDenseCap);

/// f(alpha) for alpha in F, where F is level q or an extension of it.
Element evaluate(const AdditivePoly& f, const Field& F, const Element& alpha);
inline Element evaluate(const AdditivePoly& f, const Element& alpha) { return evaluate(f, f.field(), alpha); }

std::string to_string(const AdditivePoly& f);

}  // namespace addpoly
