#pragma once

// Counting invariant subspaces and maximal chains from a species alone, and
// through the bijection with the lattice, counting right components and
// complete decompositions of additive polynomials.

#include <cstdint>
#include <set>
#include <vector>

#include "addpoly/additive.hpp"
#include "addpoly/oracle.hpp"
#include "addpoly/species.hpp"

namespace addpoly {

struct CountBudget {
  /// Largest reduced dimension of one eigenfactor whose lattice is enumerated.
  std::size_t dim_budget = 6;
  /// Largest r^m over which an eigenfactor lattice is enumerated.
  std::uint64_t max_base = 9;
  OracleBudget oracle{};
};

/// (b^n - 1) / (b - 1)
BigInt q_bracket(std::size_t n, const BigInt& b);

/// Number of invariant lines: sum of [blocks]_r over degree-one eigenfactors.
BigInt count_lines(const Species& s, const BigInt& r);

/// g_0..g_n with g_d the number of invariant d-subspaces. Middle coefficients
/// of eigenfactors with reduced dimension at least 4 are enumerated, within
/// the budget.
std::vector<BigInt> generating_function(const Species& s, const BigInt& r, const CountBudget& budget = {});

/// base^(lambda_(i+1) + ... + lambda_k) * [lambda_i]_base, with 1-based i.
BigInt depth_count(const std::vector<std::size_t>& lambdas, std::size_t i, const BigInt& base);
/// Block type of the quotient by a minimal invariant subspace of depth i.
std::vector<std::size_t> quotient_species(const std::vector<std::size_t>& lambdas, std::size_t i);

/// Number of maximal chains of invariant subspaces.
BigInt count_chains(const Species& s, const BigInt& r);

/// g_d for a species of dimension n; 0 outside 0..n.
BigInt count_subspaces(const Species& s, const BigInt& r, long d, const CountBudget& budget = {});

/// Monic right components of exponent d of a monic squarefree f.
BigInt count_right_components(const AdditivePoly& f, long d, const CountBudget& budget = {},
                              std::uint64_t seed = 0);
/// Same for any monic fbar = x^(r^m) o f.
BigInt count_right_components_general(const AdditivePoly& fbar, long d, const CountBudget& budget = {},
                                      std::uint64_t seed = 0);

/// Partitions of n as weakly decreasing parts, in reverse lexicographic order.
std::vector<std::vector<std::size_t>> partitions(std::size_t n);

/// Candidate values for the number of exponent-one right components of an
/// f of exponent n: sums [pi]_r over partitions of 0..n.
std::set<BigInt> mhat(std::size_t n, const BigInt& r);
/// The same as polynomials in r (coefficient of r^t at index t).
std::set<std::vector<std::uint64_t>> mhat_symbolic(std::size_t n);

/// Number of a in F_q^* with pi_(r-1)(f)(a) = 0.
BigInt ore_criterion_count(const AdditivePoly& f, std::uint64_t degree_cap = kDefaultDenseCap,
                           std::uint64_t seed = 0);

}  // namespace addpoly
