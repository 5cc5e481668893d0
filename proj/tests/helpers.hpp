#pragma once

#include <initializer_list>
#include <random>
#include <vector>

#include "addpoly/additive.hpp"
#include "addpoly/frobjordan.hpp"
#include "addpoly/linalg.hpp"
#include "addpoly/species.hpp"
#include "addpoly/ffield.hpp"
#include "addpoly/upoly.hpp"

namespace testing {

using namespace addpoly;

// Polynomials are written by element index: digits of the index in base p.
inline AdditivePoly apoly(const FieldTower& T, std::initializer_list<std::uint64_t> idx) {
  std::vector<Element> c;
  for (auto i : idx) c.push_back(T.q().element(i));
  return AdditivePoly(T, c);
}

inline UPoly upoly(const Field& F, std::initializer_list<std::uint64_t> idx) {
  std::vector<Element> c;
  for (auto i : idx) c.push_back(F.element(i));
  return UPoly(F, c);
}

/// x^(r^n) + x
inline AdditivePoly frobenius_minus_identity(const FieldTower& T, std::size_t n) {
  std::vector<Element> c(n + 1, T.q().zero());
  c[0] = T.q().one();
  c[n] = T.q().add(c[n], T.q().one());
  return AdditivePoly(T, c);
}

inline AdditivePoly random_apoly(const FieldTower& T, std::size_t n, std::mt19937_64& rng, bool monic = false,
                                 bool squarefree = false) {
  std::vector<Element> c;
  for (std::size_t i = 0; i <= n; ++i) c.push_back(T.q().random(rng));
  if (monic) c[n] = T.q().one();
  if (squarefree)
    while (T.q().is_zero(c[0])) c[0] = T.q().random(rng);
  return AdditivePoly(T, c);
}

/// Random central polynomial: F_r coefficients on multiples of k.
inline AdditivePoly random_central(const FieldTower& T, std::size_t deg, std::mt19937_64& rng) {
  std::vector<Element> c(deg * T.k() + 1, T.q().zero());
  for (std::size_t i = 0; i <= deg; ++i) c[i * T.k()] = T.q().embed(T.r().random(rng));
  return AdditivePoly(T, c);
}

/// Every monic squarefree polynomial of exponent n, by index.
inline std::vector<AdditivePoly> all_monic_squarefree(const FieldTower& T, std::size_t n) {
  const std::uint64_t card = *T.q().cardinality();
  std::uint64_t total = card - 1;
  for (std::size_t i = 1; i < n; ++i) total *= card;
  std::vector<AdditivePoly> out;
  for (std::uint64_t code = 0; code < total; ++code) {
    std::vector<Element> c;
    std::uint64_t x = code;
    c.push_back(T.q().element(1 + x % (card - 1)));
    x /= card - 1;
    for (std::size_t i = 1; i < n; ++i) {
      c.push_back(T.q().element(x % card));
      x /= card;
    }
    c.push_back(T.q().one());
    out.emplace_back(T, c);
  }
  return out;
}

}  // namespace testing

namespace testing {

/// Matrix from rows of element indices.
inline addpoly::Matrix matrix(const addpoly::Field& F, std::initializer_list<std::initializer_list<std::uint64_t>> rows) {
  const std::size_t n = rows.size();
  const std::size_t m = n ? rows.begin()->size() : 0;
  addpoly::Matrix out(F, n, m);
  std::size_t i = 0;
  for (const auto& row : rows) {
    std::size_t j = 0;
    for (auto v : row) out.set(i, j++, F.element(v));
    ++i;
  }
  return out;
}

inline addpoly::Species species(std::initializer_list<addpoly::Signature> sigs) {
  return addpoly::Species(std::vector<addpoly::Signature>(sigs));
}

// Every monic h of exponent d with f = g o h, by trial division.
inline std::size_t count_components_by_division(const addpoly::AdditivePoly& f, std::size_t d) {
  const addpoly::FieldTower& T = f.tower();
  const std::uint64_t card = *T.q().cardinality();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < d; ++i) total *= card;
  std::size_t hits = 0;
  for (std::uint64_t code = 0; code < total; ++code) {
    std::vector<addpoly::Element> c;
    std::uint64_t x = code;
    for (std::size_t i = 0; i < d; ++i) {
      c.push_back(T.q().element(x % card));
      x /= card;
    }
    c.push_back(T.q().one());
    if (right_divmod(f, addpoly::AdditivePoly(T, c)).remainder.is_zero()) ++hits;
  }
  return hits;
}


/// Block-count vectors lambda with sum j * lambda_j = D.
inline std::vector<std::vector<std::size_t>> block_types(std::size_t D) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> lam(D, 0);
  auto rec = [&](auto&& self, std::size_t order, std::size_t left) -> void {
    if (order == 0) {
      if (left == 0) {
        auto t = lam;
        addpoly::trim_trailing_zeros(t);
        out.push_back(t);
      }
      return;
    }
    for (std::size_t c = 0; c * order <= left; ++c) {
      lam[order - 1] = c;
      self(self, order - 1, left - c * order);
    }
    lam[order - 1] = 0;
  };
  if (D > 0) rec(rec, D, D);
  return out;
}

/// Every species of dimension 1..max_dim that F can realize (enough monic
/// irreducibles of each degree for distinct eigenfactors).
inline std::vector<addpoly::Species> all_species(const addpoly::Field& F, std::size_t max_dim) {
  std::vector<addpoly::Signature> sigs;
  std::vector<std::size_t> available(max_dim + 1, 0);
  for (std::size_t m = 1; m <= max_dim; ++m) {
    available[m] = addpoly::monic_irreducibles(F, m, max_dim).size();
    for (std::size_t D = 1; D * m <= max_dim; ++D)
      for (auto& lam : block_types(D)) sigs.push_back(addpoly::Signature{m, lam});
  }
  std::vector<addpoly::Species> out;
  std::vector<addpoly::Signature> cur;
  auto rec = [&](auto&& self, std::size_t from, std::size_t dim) -> void {
    if (!cur.empty()) {
      std::vector<std::size_t> used(max_dim + 1, 0);
      for (auto& s : cur) ++used[s.m];
      bool ok = true;
      for (std::size_t m = 1; m <= max_dim; ++m) ok = ok && used[m] <= available[m];
      if (!ok) return;
      out.emplace_back(cur);
    }
    for (std::size_t i = from; i < sigs.size(); ++i) {
      if (dim + sigs[i].dimension() > max_dim) continue;
      cur.push_back(sigs[i]);
      self(self, i, dim + sigs[i].dimension());
      cur.pop_back();
    }
  };
  rec(rec, 0, 0);
  return out;
}

}  // namespace testing
