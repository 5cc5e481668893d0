#pragma once

// Brute-force ground truth for small instances: the root space as an explicit
// F_r-vector space inside F_(q^E), the matrix of sigma_q on it, exhaustive
// enumeration of invariant subspaces and maximal chains, and species read off
// a matrix. Every routine enforces an explicit budget.

#include <cstdint>
#include <vector>

#include "addpoly/additive.hpp"
#include "addpoly/linalg.hpp"
#include "addpoly/species.hpp"
#include "addpoly/upoly.hpp"

namespace addpoly {

struct OracleBudget {
  std::uint64_t max_ext = 32;
  /// Stored subspaces across one enumeration.
  std::uint64_t max_subspaces = 250'000;
  /// Candidate generating vectors tried across one enumeration.
  std::uint64_t max_candidates = 20'000'000;
  /// Largest r^d for which a component is expanded from its roots.
  std::uint64_t max_component_degree = 4096;
};

struct RootSpace {
  FieldTower tower;  // with the extension level F_(q^E)
  std::size_t ext_degree = 1;
  std::vector<Element> basis;  // n elements at level ext
  Matrix frobenius;            // over F_r, column j = sigma_q(basis_j)
};

RootSpace root_space(const AdditivePoly& f, const OracleBudget& budget = {});

/// Subspaces as reduced echelon bases (one row per basis vector).
std::vector<Matrix> invariant_subspaces(const Matrix& A, std::size_t d, const OracleBudget& budget = {});
std::vector<Matrix> all_invariant_subspaces(const Matrix& A, const OracleBudget& budget = {});

/// Number of saturated chains 0 = W_0 < ... < W_s = V of invariant subspaces.
/// Throws InternalInconsistency if two chains have different lengths.
BigInt maximal_chains_brute(const Matrix& A, const OracleBudget& budget = {});

/// Invariant subspace counts by dimension 0..up_to for a nilpotent matrix,
/// walking one dimension at a time.
std::vector<BigInt> nilpotent_layer_counts(const Matrix& N, std::size_t up_to, const OracleBudget& budget = {});

/// Monic right components of exponent d, built as products over invariant
/// subspaces of the root space.
std::vector<AdditivePoly> right_components_brute(const AdditivePoly& f, std::size_t d, const RootSpace& rs,
                                                 const OracleBudget& budget = {});
std::vector<AdditivePoly> right_components_brute(const AdditivePoly& f, std::size_t d,
                                                 const OracleBudget& budget = {});

/// All elements of span(vectors) over F_r, at the level of the vectors.
std::vector<Element> span_elements(const Field& F, const Field& Fr, const std::vector<Element>& vectors);

/// Dense product of (x - alpha) over the given roots.
UPoly subspace_polynomial(const Field& F, const std::vector<Element>& roots);

UPoly minimal_polynomial(const Matrix& A);
Matrix eval_poly_at_matrix(const UPoly& u, const Matrix& A);
Species species_from_matrix(const Matrix& A, std::uint64_t seed = 0);

}  // namespace addpoly
