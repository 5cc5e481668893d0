#pragma once

// Rational Jordan form and species of the q-th power Frobenius on the root
// space of f, computed from f alone: minimal central left component, one
// factorization over F_r, and one gcrc per power of each eigenfactor.

#include <cstdint>
#include <vector>

#include "addpoly/additive.hpp"
#include "addpoly/linalg.hpp"
#include "addpoly/species.hpp"
#include "addpoly/upoly.hpp"

namespace addpoly {

struct EigenData {
  UPoly u;                           // monic irreducible over F_r
  std::size_t multiplicity = 0;      // exponent of u in the minimal polynomial
  std::vector<std::size_t> nullities;  // nu_0..nu_{k+1}
  std::vector<std::size_t> lambdas;    // lambda_1..lambda_k
  /// Block orders, weakly decreasing.
  std::vector<std::size_t> orders() const;
  Signature signature() const;
};

struct RationalJordanForm {
  std::vector<EigenData> eigen;  // canonical order of u
  UPoly minpoly;

  Species species() const;
  std::size_t dimension() const;
};

RationalJordanForm rational_jordan_form(const AdditivePoly& f, std::uint64_t seed = 0);

/// nu_j = expn(gcrc(f, tau^-1(u^j))) for j = 0..k+1.
std::vector<std::size_t> nullity_sequence(const AdditivePoly& f, const UPoly& u, std::size_t k);

/// lambda_j = (2 nu_j - nu_{j-1} - nu_{j+1}) / m, trailing zeros trimmed.
std::vector<std::size_t> lambdas_from_nullities(const std::vector<std::size_t>& nu, std::size_t m);

/// Ones on the subdiagonal, last column -a_0..-a_{m-1}.
Matrix companion_matrix(const UPoly& u);
/// `order` companion blocks on the diagonal, identity blocks just above it.
Matrix jordan_block(const UPoly& u, std::size_t order);
Matrix block_diagonal(const Field& F, const std::vector<Matrix>& blocks);
Matrix block_matrix(const RationalJordanForm& J);

/// Monic irreducibles of degree m over F in canonical order, at most `limit`.
std::vector<UPoly> monic_irreducibles(const Field& F, std::size_t m, std::size_t limit);

/// A matrix over F with the given species, using the first irreducibles of
/// each degree as eigenfactors. InputError if F has too few of them.
Matrix realize_species(const Species& s, const Field& F);

}  // namespace addpoly
