#pragma once

// Dense univariate polynomials over one level of a field tower, and their
// factorization over F_r.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "addpoly/ffield.hpp"

namespace addpoly {

class UPoly {
 public:
  explicit UPoly(Field field) : field_(std::move(field)) {}
  UPoly(Field field, std::vector<Element> coeffs);

  static UPoly constant(const Field& field, const Element& c);
  /// c * y^deg
  static UPoly monomial(const Field& field, const Element& c, std::size_t deg);
  static UPoly variable(const Field& field) { return monomial(field, field.one(), 1); }

  const Field& field() const noexcept { return field_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<Element>& coeffs() const noexcept { return coeffs_; }
  Element coeff(std::size_t i) const;
  const Element& leading() const;
  bool is_monic() const;

  friend bool operator==(const UPoly& a, const UPoly& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim();

  Field field_;
  std::vector<Element> coeffs_;
};

UPoly operator+(const UPoly& a, const UPoly& b);
UPoly operator-(const UPoly& a, const UPoly& b);
UPoly operator*(const UPoly& a, const UPoly& b);
UPoly scale(const UPoly& a, const Element& c);

struct PolyDivMod {
  UPoly quotient;
  UPoly remainder;
};
PolyDivMod divmod(const UPoly& a, const UPoly& b);
UPoly rem(const UPoly& a, const UPoly& b);
UPoly make_monic(const UPoly& a);
/// Monic gcd; gcd(0, 0) = 0.
UPoly gcd(const UPoly& a, const UPoly& b);
UPoly mulmod(const UPoly& a, const UPoly& b, const UPoly& m);
UPoly powmod(const UPoly& a, const BigInt& e, const UPoly& m);
/// a^(|F|) mod m, computed as degree() successive p-th powers.
UPoly frobenius_mod(const UPoly& a, const UPoly& m);
UPoly derivative(const UPoly& a);
Element evaluate(const UPoly& a, const Element& x);
/// Coefficient-wise p-th root of a polynomial in y^p.
UPoly pth_root(const UPoly& a);

struct Factor {
  UPoly poly;
  std::size_t multiplicity;
};

/// Squarefree factors u_i with a = lc * prod u_i^i (u_i monic, pairwise coprime).
std::vector<Factor> squarefree_decomposition(const UPoly& a);

/// Full factorization: squarefree split, distinct-degree split, randomized
/// equal-degree split. Output is sorted by (multiplicity-free) canonical
/// order: degree, then coefficient indices; identical seeds give identical output.
std::vector<Factor> factor(const UPoly& a, std::uint64_t seed = 0);

bool is_irreducible(const UPoly& a);

/// Distinct roots of a in its coefficient field, sorted by element index.
std::vector<Element> roots(const UPoly& a, std::uint64_t seed = 0);

/// Least E >= 1 with y^E = 1 mod u. Throws Overflow beyond cap.
std::uint64_t order_of_y_mod(const UPoly& u, std::uint64_t cap);

/// Lexicographic (degree, coefficient index) ordering for canonical output.
bool canonical_less(const UPoly& a, const UPoly& b);

/// Human-readable form such as "y^2+y+1"; non-prime coefficients print as
/// their digit index in brackets.
std::string to_string(const UPoly& a);

}  // namespace addpoly
