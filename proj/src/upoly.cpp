#include "addpoly/upoly.hpp"

#include <algorithm>
#include <sstream>

#include "addpoly/error.hpp"

namespace addpoly {

namespace {

constexpr std::size_t kKaratsubaThreshold = 32;

using Coeffs = std::vector<Element>;

void add_into(const Field& F, Coeffs& acc, std::size_t offset, const Coeffs& x) {
  if (acc.size() < offset + x.size()) acc.resize(offset + x.size(), F.zero());
  for (std::size_t i = 0; i < x.size(); ++i) F.add_to(acc[offset + i], x[i]);
}

Coeffs schoolbook(const Field& F, const Coeffs& a, const Coeffs& b) {
  if (a.empty() || b.empty()) return {};
  Coeffs out(a.size() + b.size() - 1, F.zero());
  Element tmp = F.zero();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (F.is_zero(a[i])) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (F.is_zero(b[j])) continue;
      F.mul_into(a[i], b[j], tmp);
      F.add_to(out[i + j], tmp);
    }
  }
  return out;
}

Coeffs karatsuba(const Field& F, const Coeffs& a, const Coeffs& b) {
  if (a.size() <= kKaratsubaThreshold || b.size() <= kKaratsubaThreshold) return schoolbook(F, a, b);
  const std::size_t h = std::max(a.size(), b.size()) / 2;
  auto lo = [&](const Coeffs& x) { return Coeffs(x.begin(), x.begin() + static_cast<long>(std::min(h, x.size()))); };
  auto hi = [&](const Coeffs& x) {
    return x.size() > h ? Coeffs(x.begin() + static_cast<long>(h), x.end()) : Coeffs{};
  };
  const Coeffs a0 = lo(a), a1 = hi(a), b0 = lo(b), b1 = hi(b);
  Coeffs z0 = karatsuba(F, a0, b0);
  Coeffs z2 = karatsuba(F, a1, b1);
  Coeffs sa = a0, sb = b0;
  add_into(F, sa, 0, a1);
  add_into(F, sb, 0, b1);
  Coeffs z1 = karatsuba(F, sa, sb);
  for (std::size_t i = 0; i < z0.size() && i < z1.size(); ++i) F.sub_from(z1[i], z0[i]);
  for (std::size_t i = 0; i < z2.size() && i < z1.size(); ++i) F.sub_from(z1[i], z2[i]);
  Coeffs out(a.size() + b.size() - 1, F.zero());
  add_into(F, out, 0, z0);
  add_into(F, out, h, z1);
  add_into(F, out, 2 * h, z2);
  out.resize(a.size() + b.size() - 1);
  return out;
}

// a^p for a polynomial over a field of characteristic p: coefficients map
// through Frobenius onto exponents i * p.
UPoly pth_power(const UPoly& a) {
  const Field& F = a.field();
  if (a.is_zero()) return a;
  const std::size_t p = F.characteristic();
  std::vector<Element> c(static_cast<std::size_t>(a.degree()) * p + 1, F.zero());
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) c[i * p] = F.frobenius(a.coeffs()[i], 1);
  return UPoly(F, std::move(c));
}

std::vector<UPoly> equal_degree_split(const UPoly& g, std::size_t d, std::mt19937_64& rng);

}  // namespace

// ---------------------------------------------------------------------------

UPoly::UPoly(Field field, std::vector<Element> coeffs) : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c = field_.embed(c);
  trim();
}

void UPoly::trim() {
  while (!coeffs_.empty() && field_.is_zero(coeffs_.back())) coeffs_.pop_back();
}

UPoly UPoly::constant(const Field& field, const Element& c) { return UPoly(field, {c}); }

UPoly UPoly::monomial(const Field& field, const Element& c, std::size_t deg) {
  std::vector<Element> v(deg + 1, field.zero());
  v[deg] = c;
  return UPoly(field, std::move(v));
}

Element UPoly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : field_.zero(); }

const Element& UPoly::leading() const {
  if (coeffs_.empty()) throw InputError("zero polynomial has no leading coefficient");
  return coeffs_.back();
}

bool UPoly::is_monic() const { return !coeffs_.empty() && field_.is_one(coeffs_.back()); }

UPoly operator+(const UPoly& a, const UPoly& b) {
  std::vector<Element> c = a.coeffs();
  add_into(a.field(), c, 0, b.coeffs());
  return UPoly(a.field(), std::move(c));
}

UPoly operator-(const UPoly& a, const UPoly& b) {
  const Field& F = a.field();
  std::vector<Element> c = a.coeffs();
  if (c.size() < b.coeffs().size()) c.resize(b.coeffs().size(), F.zero());
  for (std::size_t i = 0; i < b.coeffs().size(); ++i) F.sub_from(c[i], b.coeffs()[i]);
  return UPoly(F, std::move(c));
}

UPoly operator*(const UPoly& a, const UPoly& b) { return UPoly(a.field(), karatsuba(a.field(), a.coeffs(), b.coeffs())); }

UPoly scale(const UPoly& a, const Element& c) {
  std::vector<Element> v;
  v.reserve(a.coeffs().size());
  for (const auto& x : a.coeffs()) v.push_back(a.field().mul(x, c));
  return UPoly(a.field(), std::move(v));
}

PolyDivMod divmod(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw InputError("polynomial division by zero");
  const Field& F = a.field();
  if (a.degree() < b.degree()) return {UPoly(F), a};
  std::vector<Element> r = a.coeffs();
  const std::size_t db = static_cast<std::size_t>(b.degree());
  std::vector<Element> q(r.size() - db, F.zero());
  const Element inv_lead = F.inv(b.leading());
  Element tmp = F.zero();
  for (std::size_t i = r.size(); i-- > db;) {
    if (F.is_zero(r[i])) continue;
    const Element c = F.mul(r[i], inv_lead);
    q[i - db] = c;
    for (std::size_t j = 0; j <= db; ++j) {
      F.mul_into(c, b.coeffs()[j], tmp);
      F.sub_from(r[i - db + j], tmp);
    }
  }
  r.resize(db);
  return {UPoly(F, std::move(q)), UPoly(F, std::move(r))};
}

UPoly rem(const UPoly& a, const UPoly& b) { return divmod(a, b).remainder; }

UPoly make_monic(const UPoly& a) {
  if (a.is_zero() || a.is_monic()) return a;
  return scale(a, a.field().inv(a.leading()));
}

UPoly gcd(const UPoly& a, const UPoly& b) {
  UPoly x = a, y = b;
  while (!y.is_zero()) {
    UPoly r = rem(x, y);
    x = std::move(y);
    y = std::move(r);
  }
  return make_monic(x);
}

UPoly mulmod(const UPoly& a, const UPoly& b, const UPoly& m) { return rem(a * b, m); }

UPoly powmod(const UPoly& a, const BigInt& e, const UPoly& m) {
  const Field& F = a.field();
  UPoly acc = rem(UPoly::constant(F, F.one()), m);
  UPoly base = rem(a, m);
  if (e <= 0) return acc;
  const std::size_t bits = boost::multiprecision::msb(e) + 1;
  for (std::size_t i = 0; i < bits; ++i) {
    if (boost::multiprecision::bit_test(e, static_cast<unsigned>(i))) acc = mulmod(acc, base, m);
    if (i + 1 < bits) base = mulmod(base, base, m);
  }
  return acc;
}

UPoly frobenius_mod(const UPoly& a, const UPoly& m) {
  const Field& F = a.field();
  UPoly x = rem(a, m);
  const bool spread = F.characteristic() <= 64;
  for (std::size_t i = 0; i < F.degree(); ++i) {
    x = spread ? rem(pth_power(x), m) : powmod(x, BigInt(F.characteristic()), m);
  }
  return x;
}

UPoly derivative(const UPoly& a) {
  const Field& F = a.field();
  if (a.coeffs().size() <= 1) return UPoly(F);
  std::vector<Element> c;
  c.reserve(a.coeffs().size() - 1);
  for (std::size_t i = 1; i < a.coeffs().size(); ++i) {
    c.push_back(F.mul(a.coeffs()[i], F.from_int(static_cast<std::int64_t>(i % F.characteristic()))));
  }
  return UPoly(F, std::move(c));
}

Element evaluate(const UPoly& a, const Element& x) {
  const Field& F = a.field();
  const Element xx = F.embed(x);
  Element acc = F.zero();
  for (std::size_t i = a.coeffs().size(); i-- > 0;) acc = F.add(F.mul(acc, xx), a.coeffs()[i]);
  return acc;
}

UPoly pth_root(const UPoly& a) {
  const Field& F = a.field();
  const std::size_t p = F.characteristic();
  std::vector<Element> c;
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    if (i % p == 0) {
      c.push_back(F.frobenius_inverse(a.coeffs()[i], 1));
    } else if (!F.is_zero(a.coeffs()[i])) {
      throw InputError("pth_root: polynomial is not a p-th power");
    }
  }
  return UPoly(F, std::move(c));
}

std::vector<Factor> squarefree_decomposition(const UPoly& a) {
  if (a.is_zero()) throw InputError("squarefree decomposition of the zero polynomial");
  const Field& F = a.field();
  std::vector<Factor> out;
  UPoly f = make_monic(a);
  if (f.degree() == 0) return out;
  const std::size_t p = F.characteristic();

  UPoly c = gcd(f, derivative(f));
  UPoly w = divmod(f, c).quotient;
  std::size_t i = 1;
  const UPoly one = UPoly::constant(F, F.one());
  while (w.degree() > 0) {
    UPoly y = gcd(w, c);
    UPoly fac = divmod(w, y).quotient;
    if (fac.degree() > 0) out.push_back({make_monic(fac), i});
    w = std::move(y);
    c = divmod(c, w).quotient;
    ++i;
  }
  if (c.degree() > 0) {
    for (auto& [g, j] : squarefree_decomposition(pth_root(c))) out.push_back({std::move(g), j * p});
  }
  std::sort(out.begin(), out.end(), [](const Factor& x, const Factor& y) { return x.multiplicity < y.multiplicity; });
  return out;
}

namespace {

std::vector<std::pair<UPoly, std::size_t>> distinct_degree_split(UPoly u) {
  const Field& F = u.field();
  std::vector<std::pair<UPoly, std::size_t>> out;
  const UPoly y = UPoly::variable(F);
  UPoly h = rem(y, u);
  for (std::size_t d = 1; u.degree() >= static_cast<long>(2 * d); ++d) {
    h = frobenius_mod(h, u);
    UPoly g = gcd(h - y, u);
    if (g.degree() > 0) {
      out.emplace_back(g, d);
      u = divmod(u, g).quotient;
      h = rem(h, u);
    }
  }
  if (u.degree() > 0) out.emplace_back(make_monic(u), static_cast<std::size_t>(u.degree()));
  return out;
}

UPoly random_poly(const Field& F, std::size_t below_degree, std::mt19937_64& rng) {
  std::vector<Element> c;
  c.reserve(below_degree);
  for (std::size_t i = 0; i < below_degree; ++i) c.push_back(F.random(rng));
  return UPoly(F, std::move(c));
}

// Cantor-Zassenhaus. In odd characteristic gcd(a^((Q^d-1)/2) - 1, g); in
// characteristic 2 the absolute trace a + a^2 + ... + a^(2^(Nd-1)).
std::vector<UPoly> equal_degree_split(const UPoly& g, std::size_t d, std::mt19937_64& rng) {
  const Field& F = g.field();
  const std::size_t n = static_cast<std::size_t>(g.degree());
  if (n == d) return {g};
  const UPoly one = UPoly::constant(F, F.one());
  const bool char2 = F.characteristic() == 2;
  BigInt exponent = 0;
  if (!char2) {
    BigInt Qd = 1;
    for (std::size_t i = 0; i < d; ++i) Qd *= F.order();
    exponent = (Qd - 1) / 2;
  }
  while (true) {
    UPoly a = random_poly(F, n, rng);
    if (a.degree() < 1) continue;
    UPoly b(F);
    if (char2) {
      UPoly t = a;
      b = a;
      for (std::size_t i = 1; i < F.degree() * d; ++i) {
        t = mulmod(t, t, g);
        b = b + t;
      }
    } else {
      b = powmod(a, exponent, g) - one;
    }
    UPoly h = gcd(b, g);
    if (h.degree() > 0 && h.degree() < g.degree()) {
      auto left = equal_degree_split(h, d, rng);
      auto right = equal_degree_split(divmod(g, h).quotient, d, rng);
      left.insert(left.end(), right.begin(), right.end());
      return left;
    }
  }
}

}  // namespace

bool canonical_less(const UPoly& a, const UPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  const Field& F = a.field();
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    const auto x = F.index(a.coeffs()[i]);
    const auto y = F.index(b.coeffs()[i]);
    if (x != y) return x < y;
  }
  return false;
}

std::vector<Factor> factor(const UPoly& a, std::uint64_t seed) {
  if (a.is_zero()) throw InputError("cannot factor the zero polynomial");
  std::mt19937_64 rng(seed);
  std::vector<Factor> out;
  for (const auto& [part, mult] : squarefree_decomposition(a)) {
    for (const auto& [group, d] : distinct_degree_split(part)) {
      for (auto& irr : equal_degree_split(group, d, rng)) out.push_back({make_monic(irr), mult});
    }
  }
  std::sort(out.begin(), out.end(), [](const Factor& x, const Factor& y) { return canonical_less(x.poly, y.poly); });
  return out;
}

namespace {

std::vector<std::size_t> prime_divisors(std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

bool is_irreducible(const UPoly& a) {
  if (a.degree() < 1) throw InputError("irreducibility test needs degree >= 1");
  const std::size_t n = static_cast<std::size_t>(a.degree());
  if (n == 1) return true;
  const UPoly u = make_monic(a);
  const Field& F = u.field();
  const UPoly y = UPoly::variable(F);
  // powers[j] = y^(Q^j) mod u
  std::vector<UPoly> powers{rem(y, u)};
  for (std::size_t j = 1; j <= n; ++j) powers.push_back(frobenius_mod(powers.back(), u));
  if (!(powers[n] == rem(y, u))) return false;
  for (std::size_t l : prime_divisors(n)) {
    if (gcd(powers[n / l] - y, u).degree() != 0) return false;
  }
  return true;
}

std::vector<Element> roots(const UPoly& a, std::uint64_t seed) {
  if (a.is_zero()) throw InputError("roots of the zero polynomial");
  const Field& F = a.field();
  std::vector<Element> out;
  if (a.degree() < 1) return out;
  const UPoly u = make_monic(a);
  const UPoly y = UPoly::variable(F);
  UPoly g = gcd(frobenius_mod(y, u) - y, u);
  if (g.degree() < 1) return out;
  std::mt19937_64 rng(seed);
  for (const auto& lin : equal_degree_split(g, 1, rng)) out.push_back(F.neg(make_monic(lin).coeff(0)));
  std::sort(out.begin(), out.end(), [&](const Element& x, const Element& z) { return F.index(x) < F.index(z); });
  return out;
}

std::uint64_t order_of_y_mod(const UPoly& u, std::uint64_t cap) {
  if (u.is_zero()) throw InputError("order of y modulo zero");
  const Field& F = u.field();
  if (u.degree() == 0) return 1;
  if (F.is_zero(u.coeff(0))) throw InputError("order of y: modulus is divisible by y");
  const UPoly m = make_monic(u);
  const std::size_t n = static_cast<std::size_t>(m.degree());
  // h holds y^E mod m as a length-n coefficient vector.
  std::vector<Element> h(n, F.zero());
  h[0] = F.one();
  Element tmp = F.zero();
  for (std::uint64_t E = 1; E <= cap; ++E) {
    const Element top = h[n - 1];
    for (std::size_t i = n - 1; i > 0; --i) h[i] = h[i - 1];
    h[0] = F.zero();
    if (!F.is_zero(top)) {
      for (std::size_t i = 0; i < n; ++i) {
        F.mul_into(top, m.coeffs()[i], tmp);
        F.sub_from(h[i], tmp);
      }
    }
    bool is_one = F.is_one(h[0]);
    for (std::size_t i = 1; is_one && i < n; ++i) is_one = F.is_zero(h[i]);
    if (is_one) return E;
  }
  throw Overflow("order of y exceeds cap " + std::to_string(cap));
}

std::string to_string(const UPoly& a) {
  const Field& F = a.field();
  if (a.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = a.coeffs().size(); i-- > 0;) {
    const Element& c = a.coeffs()[i];
    if (F.is_zero(c)) continue;
    if (!first) os << "+";
    first = false;
    const bool unit = F.is_one(c);
    if (!unit || i == 0) {
      if (F.degree() == 1) {
        os << c.coords[0];
      } else {
        os << "[" << F.index(c) << "]";
      }
    }
    if (i > 0) {
      if (!unit) os << "*";
      os << "y";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

}  // namespace addpoly
