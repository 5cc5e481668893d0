#include "addpoly/oracle.hpp"

#include <map>
#include <set>

#include "addpoly/error.hpp"
#include "addpoly/frobjordan.hpp"

namespace addpoly {

namespace {

using Key = std::vector<Digit>;

struct Subspace {
  Matrix basis;  // reduced echelon rows
  std::vector<std::size_t> pivots;
};

Key key_of(const Matrix& m) {
  Key k;
  k.reserve(m.rows() * m.cols() * m.field().degree() + 1);
  k.push_back(static_cast<Digit>(m.rows()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    auto r = m.row(i);
    k.insert(k.end(), r.begin(), r.end());
  }
  return k;
}

std::vector<Element> row_of(const Matrix& m, std::size_t i) {
  std::vector<Element> v;
  v.reserve(m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j) v.push_back(m.at(i, j));
  return v;
}

Subspace make_subspace(const Field& F, const std::vector<std::vector<Element>>& rows, std::size_t n) {
  Matrix m(F, rows.size(), n);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) m.set(i, j, rows[i][j]);
  auto piv = rref(m);
  Matrix trimmed(F, piv.size(), n);
  for (std::size_t i = 0; i < piv.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) trimmed.set(i, j, m.at(i, j));
  return {std::move(trimmed), std::move(piv)};
}

/// v reduced against the echelon rows of W; zero iff v lies in W.
std::vector<Element> reduce(const Subspace& W, std::vector<Element> v) {
  const Field& F = W.basis.field();
  Element tmp = F.zero();
  for (std::size_t i = 0; i < W.pivots.size(); ++i) {
    const Element c = v[W.pivots[i]];
    if (F.is_zero(c)) continue;
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (W.basis.is_zero_entry(i, j)) continue;
      F.mul_into(c, W.basis.at(i, j), tmp);
      F.sub_from(v[j], tmp);
    }
  }
  return v;
}

bool is_zero_vector(const Field& F, const std::vector<Element>& v) {
  for (const auto& x : v)
    if (!F.is_zero(x)) return false;
  return true;
}

// Coset representatives of V / W up to scaling: zero on the pivots of W,
// first nonzero free coordinate equal to one.
template <class Fn>
void for_each_candidate(const Subspace& W, std::size_t n, std::uint64_t& budget_left, Fn&& fn) {
  const Field& F = W.basis.field();
  const std::uint64_t b = *F.cardinality();
  std::vector<bool> is_pivot(n, false);
  for (auto p : W.pivots) is_pivot[p] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t j = 0; j < n; ++j)
    if (!is_pivot[j]) free_cols.push_back(j);
  for (std::size_t lead = 0; lead < free_cols.size(); ++lead) {
    const std::size_t rest = free_cols.size() - lead - 1;
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < rest; ++i) {
      total *= b;
      if (total > budget_left) throw BudgetExceeded("subspace enumeration: candidate budget exhausted");
    }
    for (std::uint64_t code = 0; code < total; ++code) {
      if (budget_left == 0) throw BudgetExceeded("subspace enumeration: candidate budget exhausted");
      --budget_left;
      std::vector<Element> v(n, F.zero());
      v[free_cols[lead]] = F.one();
      std::uint64_t x = code;
      for (std::size_t i = lead + 1; i < free_cols.size(); ++i) {
        v[free_cols[i]] = F.element(x % b);
        x /= b;
      }
      fn(v);
    }
  }
}

struct Extension {
  Subspace space;
  UPoly mu;  // minimal polynomial of v modulo W
};

Extension extend(const Matrix& A, const Subspace& W, const std::vector<Element>& v) {
  const Field& F = A.field();
  const std::size_t n = A.cols();
  IncrementalEliminator elim(F, n);
  std::vector<std::vector<Element>> rows;
  for (std::size_t i = 0; i < W.basis.rows(); ++i) {
    rows.push_back(row_of(W.basis, i));
    elim.add(rows.back());
  }
  const std::size_t t = rows.size();
  std::vector<Element> cur = v;
  while (true) {
    if (auto dep = elim.add(cur)) {
      std::vector<Element> mu(dep->begin() + static_cast<long>(t), dep->end());
      return {make_subspace(F, rows, n), UPoly(F, std::move(mu))};
    }
    rows.push_back(cur);
    cur = mul_vec(A, cur);
  }
}

struct Lattice {
  std::vector<std::map<Key, Subspace>> layers;
  std::map<Key, std::set<Key>> covers;
};

Lattice enumerate_lattice(const Matrix& A, std::size_t max_dim, bool want_covers, const OracleBudget& budget) {
  const Field& F = A.field();
  const std::size_t n = A.cols();
  if (A.rows() != n) throw InputError("invariant subspaces need a square matrix");
  if (!F.cardinality()) throw BudgetExceeded("field too large for subspace enumeration");
  Lattice L;
  L.layers.resize(n + 1);
  Subspace zero{Matrix(F, 0, n), {}};
  L.layers[0].emplace(key_of(zero.basis), std::move(zero));
  std::uint64_t stored = 1;
  std::uint64_t candidates = budget.max_candidates;
  const std::size_t last = std::min(max_dim, n);
  for (std::size_t t = 0; t < last; ++t) {
    for (const auto& [wkey, W] : L.layers[t]) {
      for_each_candidate(W, n, candidates, [&](const std::vector<Element>& v) {
        Extension x = extend(A, W, v);
        const std::size_t dim = x.space.pivots.size();
        if (dim > last) return;
        Key k = key_of(x.space.basis);
        if (want_covers && is_irreducible(x.mu)) L.covers[wkey].insert(k);
        if (L.layers[dim].count(k) == 0) {
          if (++stored > budget.max_subspaces) throw BudgetExceeded("subspace enumeration: too many subspaces");
          L.layers[dim].emplace(std::move(k), std::move(x.space));
        }
      });
    }
  }
  return L;
}

}  // namespace

// ---------------------------------------------------------------------------

std::vector<Matrix> invariant_subspaces(const Matrix& A, std::size_t d, const OracleBudget& budget) {
  if (d > A.cols()) return {};
  Lattice L = enumerate_lattice(A, d, false, budget);
  std::vector<Matrix> out;
  for (auto& [k, s] : L.layers[d]) out.push_back(s.basis);
  return out;
}

std::vector<Matrix> all_invariant_subspaces(const Matrix& A, const OracleBudget& budget) {
  Lattice L = enumerate_lattice(A, A.cols(), false, budget);
  std::vector<Matrix> out;
  for (auto& layer : L.layers)
    for (auto& [k, s] : layer) out.push_back(s.basis);
  return out;
}

BigInt maximal_chains_brute(const Matrix& A, const OracleBudget& budget) {
  const std::size_t n = A.cols();
  Lattice L = enumerate_lattice(A, n, true, budget);
  std::map<Key, BigInt> chains;
  std::map<Key, std::size_t> length;
  const Key zero = L.layers[0].begin()->first;
  chains[zero] = 1;
  length[zero] = 0;
  for (std::size_t t = 0; t <= n; ++t) {
    for (const auto& [wkey, W] : L.layers[t]) {
      auto it = L.covers.find(wkey);
      if (it == L.covers.end()) continue;
      const BigInt c = chains[wkey];
      const std::size_t len = length.at(wkey) + 1;
      for (const Key& x : it->second) {
        auto [pos, fresh] = length.emplace(x, len);
        if (!fresh && pos->second != len) {
          throw InternalInconsistency("maximal chains of different lengths");
        }
        chains[x] += c;
      }
    }
  }
  const Key full = L.layers[n].begin()->first;
  return chains[full];
}

std::vector<BigInt> nilpotent_layer_counts(const Matrix& N, std::size_t up_to, const OracleBudget& budget) {
  const Field& F = N.field();
  const std::size_t n = N.cols();
  up_to = std::min(up_to, n);
  std::vector<std::map<Key, Subspace>> layers(up_to + 1);
  Subspace zero{Matrix(F, 0, n), {}};
  layers[0].emplace(key_of(zero.basis), std::move(zero));
  std::uint64_t stored = 1;
  std::uint64_t candidates = budget.max_candidates;
  std::vector<BigInt> counts{1};
  for (std::size_t t = 0; t < up_to; ++t) {
    for (const auto& [wkey, W] : layers[t]) {
      std::vector<std::vector<Element>> rows;
      for (std::size_t i = 0; i < W.basis.rows(); ++i) rows.push_back(row_of(W.basis, i));
      for_each_candidate(W, n, candidates, [&](const std::vector<Element>& v) {
        if (!is_zero_vector(F, reduce(W, mul_vec(N, v)))) return;
        rows.push_back(v);
        Subspace x = make_subspace(F, rows, n);
        rows.pop_back();
        Key k = key_of(x.basis);
        if (layers[t + 1].count(k) == 0) {
          if (++stored > budget.max_subspaces) throw BudgetExceeded("lattice walk: too many subspaces");
          layers[t + 1].emplace(std::move(k), std::move(x));
        }
      });
    }
    counts.emplace_back(layers[t + 1].size());
    layers[t].clear();
  }
  return counts;
}

RootSpace root_space(const AdditivePoly& f, const OracleBudget& budget) {
  if (!f.is_monic() || !f.is_squarefree()) throw InputError("root_space needs a monic squarefree polynomial");
  if (f.exponent() < 1) throw InputError("root_space needs exponent at least 1");
  const FieldTower& T = f.tower();
  const std::size_t n = static_cast<std::size_t>(f.exponent());
  std::uint64_t E = 0;
  try {
    E = order_of_y_mod(tau(mclc(f)), budget.max_ext);
  } catch (const Overflow&) {
    throw ExtensionTooLarge("root space needs an extension of degree above " + std::to_string(budget.max_ext));
  }
  FieldTower X = T.with_extension(E);
  const Field Fx = X.ext(), Fr = X.r();
  const std::size_t e = X.e();
  const std::size_t N = E * X.k();

  auto unit = [&](std::size_t b) {
    Element x = Fx.zero();
    x.coords[b * e] = 1;
    return x;
  };
  auto block = [&](const Element& x, std::size_t b) {
    Element y = Fr.zero();
    std::copy(x.coords.begin() + static_cast<long>(b * e), x.coords.begin() + static_cast<long>((b + 1) * e),
              y.coords.begin());
    return y;
  };

  Matrix M(Fr, N, N);
  for (std::size_t b = 0; b < N; ++b) {
    const Element img = evaluate(f, Fx, unit(b));
    for (std::size_t i = 0; i < N; ++i) M.set(i, b, block(img, i));
  }
  Matrix K = nullspace(M);
  if (K.rows() != n) {
    throw InternalInconsistency("root space has dimension " + std::to_string(K.rows()) + ", expected " +
                                std::to_string(n));
  }
  std::vector<std::size_t> pivots;
  std::vector<Element> basis;
  for (std::size_t i = 0; i < n; ++i) {
    Element a = Fx.zero();
    std::size_t piv = N;
    for (std::size_t b = 0; b < N; ++b) {
      const Element c = K.at(i, b);
      if (piv == N && !Fr.is_zero(c)) piv = b;
      std::copy(c.coords.begin(), c.coords.end(), a.coords.begin() + static_cast<long>(b * e));
    }
    pivots.push_back(piv);
    basis.push_back(std::move(a));
  }
  Matrix S(Fr, n, n);
  for (std::size_t j = 0; j < n; ++j) {
    const Element img = Fx.frobenius(basis[j], X.k() * e);
    Element check = Fx.zero();
    for (std::size_t i = 0; i < n; ++i) {
      const Element c = block(img, pivots[i]);
      S.set(i, j, c);
      check = Fx.add(check, Fx.mul(Fx.embed(c), basis[i]));
    }
    if (!(check == img)) throw InternalInconsistency("root space is not Frobenius-stable");
  }
  return RootSpace{std::move(X), E, std::move(basis), std::move(S)};
}

std::vector<Element> span_elements(const Field& F, const Field& Fr, const std::vector<Element>& vectors) {
  const std::uint64_t b = *Fr.cardinality();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < vectors.size(); ++i) total *= b;
  std::vector<Element> out;
  out.reserve(total);
  for (std::uint64_t code = 0; code < total; ++code) {
    Element acc = F.zero();
    std::uint64_t x = code;
    for (const auto& v : vectors) {
      const Element c = Fr.element(x % b);
      x /= b;
      if (!Fr.is_zero(c)) acc = F.add(acc, F.mul(F.embed(c), v));
    }
    out.push_back(std::move(acc));
  }
  return out;
}

UPoly subspace_polynomial(const Field& F, const std::vector<Element>& roots) {
  std::vector<Element> c{F.one()};
  Element tmp = F.zero();
  for (const auto& a : roots) {
    std::vector<Element> next(c.size() + 1, F.zero());
    for (std::size_t i = 0; i < c.size(); ++i) {
      F.add_to(next[i + 1], c[i]);
      F.mul_into(c[i], a, tmp);
      F.sub_from(next[i], tmp);
    }
    c = std::move(next);
  }
  return UPoly(F, std::move(c));
}

std::vector<AdditivePoly> right_components_brute(const AdditivePoly& f, std::size_t d, const RootSpace& rs,
                                                 const OracleBudget& budget) {
  const FieldTower& X = rs.tower;
  const Field Fx = X.ext(), Fr = X.r(), Fq = X.q();
  const BigInt r = X.r_value();
  BigInt deg = 1;
  for (std::size_t i = 0; i < d; ++i) deg *= r;
  if (deg > budget.max_component_degree) throw BudgetExceeded("right_components_brute: r^d above budget");
  const auto rd = static_cast<std::uint64_t>(deg);
  const auto rr = static_cast<std::uint64_t>(r);

  std::vector<AdditivePoly> out;
  for (const Matrix& W : invariant_subspaces(rs.frobenius, d, budget)) {
    std::vector<Element> gens;
    for (std::size_t i = 0; i < W.rows(); ++i) {
      Element g = Fx.zero();
      for (std::size_t j = 0; j < W.cols(); ++j) {
        const Element c = W.at(i, j);
        if (!Fr.is_zero(c)) g = Fx.add(g, Fx.mul(Fx.embed(c), rs.basis[j]));
      }
      gens.push_back(std::move(g));
    }
    const UPoly P = subspace_polynomial(Fx, span_elements(Fx, Fr, gens));
    if (static_cast<std::uint64_t>(P.degree()) != rd) throw InternalInconsistency("subspace polynomial degree");
    std::vector<Element> coeffs(d + 1, Fq.zero());
    std::uint64_t next_power = 1;
    std::size_t idx = 0;
    for (std::uint64_t i = 0; i <= rd; ++i) {
      const bool additive_slot = (i == next_power);
      if (additive_slot) next_power *= rr;
      const Element& c = P.coeffs()[i];
      if (Fx.is_zero(c)) {
        if (additive_slot) ++idx;
        continue;
      }
      if (!additive_slot) throw DescentFailure("component has a term outside the r-power exponents");
      if (!Fq.contains(c)) throw DescentFailure("component coefficient does not descend to F_q");
      coeffs[idx++] = Fq.coerce(c);
    }
    AdditivePoly h(f.tower(), std::move(coeffs));
    if (!right_divmod(f, h).remainder.is_zero()) throw InternalInconsistency("subspace polynomial is not a component");
    out.push_back(std::move(h));
  }
  return out;
}

std::vector<AdditivePoly> right_components_brute(const AdditivePoly& f, std::size_t d, const OracleBudget& budget) {
  return right_components_brute(f, d, root_space(f, budget), budget);
}

Matrix eval_poly_at_matrix(const UPoly& u, const Matrix& A) {
  const Field& F = A.field();
  Matrix R(F, A.rows(), A.cols());
  const Matrix I = Matrix::identity(F, A.rows());
  for (std::size_t i = u.coeffs().size(); i-- > 0;) R = R * A + scale(I, F.embed(u.coeffs()[i]));
  return R;
}

UPoly minimal_polynomial(const Matrix& A) {
  const Field& F = A.field();
  const std::size_t n = A.cols();
  UPoly mp = UPoly::constant(F, F.one());
  for (std::size_t s = 0; s < n; ++s) {
    IncrementalEliminator elim(F, n);
    std::vector<Element> cur(n, F.zero());
    cur[s] = F.one();
    while (true) {
      if (auto dep = elim.add(cur)) {
        UPoly mu(F, std::move(*dep));
        mp = make_monic(divmod(mp * mu, gcd(mp, mu)).quotient);
        break;
      }
      cur = mul_vec(A, cur);
    }
  }
  return mp;
}

Species species_from_matrix(const Matrix& A, std::uint64_t seed) {
  const std::size_t n = A.cols();
  std::vector<Signature> sigs;
  if (n == 0) return Species{};
  for (const auto& [u, k] : factor(minimal_polynomial(A), seed)) {
    const Matrix U = eval_poly_at_matrix(u, A);
    std::vector<std::size_t> nu{0};
    Matrix P = Matrix::identity(A.field(), n);
    for (std::size_t j = 1; j <= k + 1; ++j) {
      P = P * U;
      nu.push_back(n - rank(P));
    }
    sigs.push_back(Signature{static_cast<std::size_t>(u.degree()), lambdas_from_nullities(nu, u.degree())});
  }
  return Species(std::move(sigs));
}

}  // namespace addpoly
