#include "addpoly/latcount.hpp"

#include <algorithm>
#include <map>

#include "addpoly/error.hpp"
#include "addpoly/frobjordan.hpp"

namespace addpoly {

namespace {

BigInt power(const BigInt& b, std::size_t e) { return boost::multiprecision::pow(b, static_cast<unsigned>(e)); }

std::pair<Digit, std::size_t> prime_power(std::uint64_t b) {
  for (std::uint64_t p = 2; p * p <= b; ++p) {
    if (b % p) continue;
    std::size_t e = 0;
    while (b % p == 0) b /= p, ++e;
    if (b != 1) break;
    return {static_cast<Digit>(p), e};
  }
  if (b >= 2 && is_prime(b)) return {static_cast<Digit>(b), 1};
  throw InputError("r = " + std::to_string(b) + " is not a prime power");
}

// Lattice of one eigenfactor of degree m, over the field with r^m elements,
// in the variable z (before substituting z^m).
std::vector<BigInt> eigen_generating_function(const Signature& sig, const BigInt& r, const CountBudget& budget) {
  const BigInt base = power(r, sig.m);
  const std::size_t D = sig.reduced_dimension();
  std::vector<BigInt> g(D + 1, BigInt(0));
  g[0] = g[D] = 1;
  if (D >= 2) g[1] = g[D - 1] = q_bracket(sig.blocks(), base);
  if (D < 4) return g;
  if (D > budget.dim_budget || base > budget.max_base) {
    throw BudgetExceeded("lattice of eigenfactor " + to_string(sig) + " has dimension " + std::to_string(D) +
                         " over a field of size " + base.str() + ", beyond the enumeration budget (dimension " +
                         std::to_string(budget.dim_budget) + ", field size " + std::to_string(budget.max_base) + ")");
  }
  const auto [p, e] = prime_power(static_cast<std::uint64_t>(r));
  const Field F = FieldTower::create(p, e * sig.m, 1).r();
  // the first linear eigenfactor is y, so this block matrix is nilpotent
  const Matrix N = realize_species(Species({Signature{1, sig.lambdas}}), F);
  const auto counts = nilpotent_layer_counts(N, D / 2, budget.oracle);
  for (std::size_t d = 2; d <= D / 2; ++d) g[d] = g[D - d] = counts[d];
  return g;
}

std::vector<BigInt> multiply(const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
  std::vector<BigInt> out(a.size() + b.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

BigInt chains(const Species& s, const BigInt& r, std::map<Species, BigInt>& memo) {
  if (s.empty()) return 1;
  if (auto it = memo.find(s); it != memo.end()) return it->second;
  BigInt total = 0;
  const auto& E = s.entries();
  for (std::size_t idx = 0; idx < E.size(); ++idx) {
    const BigInt base = power(r, E[idx].m);
    const auto& lam = E[idx].lambdas;
    for (std::size_t i = 1; i <= lam.size(); ++i) {
      if (lam[i - 1] == 0) continue;
      auto next = E;
      next[idx].lambdas = quotient_species(lam, i);
      total += depth_count(lam, i, base) * chains(Species(std::move(next)), r, memo);
    }
  }
  memo.emplace(s, total);
  return total;
}

Species species_of(const AdditivePoly& f, std::uint64_t seed) { return rational_jordan_form(f, seed).species(); }

}  // namespace

BigInt q_bracket(std::size_t n, const BigInt& b) {
  if (b < 2) throw InputError("q_bracket needs base at least 2");
  return (power(b, n) - 1) / (b - 1);
}

BigInt count_lines(const Species& s, const BigInt& r) {
  BigInt total = 0;
  for (const auto& sig : s.entries())
    if (sig.m == 1) total += q_bracket(sig.blocks(), r);
  return total;
}

std::vector<BigInt> generating_function(const Species& s, const BigInt& r, const CountBudget& budget) {
  std::vector<BigInt> g{BigInt(1)};
  for (const auto& sig : s.entries()) {
    const auto reduced = eigen_generating_function(sig, r, budget);
    std::vector<BigInt> spread((reduced.size() - 1) * sig.m + 1, BigInt(0));
    for (std::size_t d = 0; d < reduced.size(); ++d) spread[d * sig.m] = reduced[d];
    g = multiply(g, spread);
  }
  return g;
}

BigInt depth_count(const std::vector<std::size_t>& lambdas, std::size_t i, const BigInt& base) {
  if (i < 1 || i > lambdas.size()) throw InputError("depth outside 1..k");
  std::size_t above = 0;
  for (std::size_t j = i; j < lambdas.size(); ++j) above += lambdas[j];
  return power(base, above) * q_bracket(lambdas[i - 1], base);
}

std::vector<std::size_t> quotient_species(const std::vector<std::size_t>& lambdas, std::size_t i) {
  if (i < 1 || i > lambdas.size() || lambdas[i - 1] == 0) throw InputError("no block of order " + std::to_string(i));
  auto out = lambdas;
  --out[i - 1];
  if (i > 1) ++out[i - 2];
  trim_trailing_zeros(out);
  return out;
}

BigInt count_chains(const Species& s, const BigInt& r) {
  std::map<Species, BigInt> memo;
  return chains(s, r, memo);
}

BigInt count_subspaces(const Species& s, const BigInt& r, long d, const CountBudget& budget) {
  const long n = static_cast<long>(s.dimension());
  if (d < 0 || d > n) return 0;
  if (d == 0 || d == n) return 1;
  if (d == 1 || d == n - 1) return count_lines(s, r);
  return generating_function(s, r, budget)[static_cast<std::size_t>(d)];
}

BigInt count_right_components(const AdditivePoly& f, long d, const CountBudget& budget, std::uint64_t seed) {
  return count_subspaces(species_of(f, seed), f.tower().r_value(), d, budget);
}

BigInt count_right_components_general(const AdditivePoly& fbar, long d, const CountBudget& budget,
                                      std::uint64_t seed) {
  if (!fbar.is_monic()) throw InputError("count_right_components_general needs a monic polynomial");
  const auto [m, f] = strip_inseparable(fbar);
  const long n = f.exponent();
  const long lo = std::max(0L, d - static_cast<long>(m));
  const long hi = std::min(d, n);
  if (lo > hi) return 0;
  if (n == 0) return 1;  // f = x, only i = 0 contributes
  const Species s = species_of(f, seed);
  const BigInt r = f.tower().r_value();
  BigInt total = 0;
  for (long i = lo; i <= hi; ++i) total += count_subspaces(s, r, i, budget);
  return total;
}

std::vector<std::vector<std::size_t>> partitions(std::size_t n) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self, std::size_t left, std::size_t cap) -> void {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (std::size_t part = std::min(left, cap); part >= 1; --part) {
      cur.push_back(part);
      self(self, left - part, part);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

std::set<BigInt> mhat(std::size_t n, const BigInt& r) {
  std::set<BigInt> out;
  for (std::size_t i = 0; i <= n; ++i) {
    for (const auto& pi : partitions(i)) {
      BigInt v = 0;
      for (auto part : pi) v += q_bracket(part, r);
      out.insert(v);
    }
  }
  return out;
}

std::set<std::vector<std::uint64_t>> mhat_symbolic(std::size_t n) {
  std::set<std::vector<std::uint64_t>> out;
  for (std::size_t i = 0; i <= n; ++i) {
    for (const auto& pi : partitions(i)) {
      std::vector<std::uint64_t> c(pi.empty() ? 0 : pi.front(), 0);
      for (auto part : pi)
        for (std::size_t t = 0; t < part; ++t) ++c[t];
      out.insert(c);
    }
  }
  return out;
}

BigInt ore_criterion_count(const AdditivePoly& f, std::uint64_t degree_cap, std::uint64_t seed) {
  if (!f.is_monic() || !f.is_squarefree()) throw InputError("ore_criterion_count needs a monic squarefree polynomial");
  const BigInt t = f.tower().r_value() - 1;
  if (t > degree_cap) throw BudgetExceeded("ore_criterion_count: r too large for the dense form");
  const UPoly pi = pi_t(f, static_cast<std::uint64_t>(t), degree_cap);
  const Field& F = pi.field();
  std::size_t count = 0;
  for (const auto& a : roots(pi, seed))
    if (!F.is_zero(a)) ++count;
  return count;
}

}  // namespace addpoly
