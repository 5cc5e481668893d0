#include "addpoly/additive.hpp"

#include <sstream>

#include "addpoly/error.hpp"
#include "addpoly/linalg.hpp"

namespace addpoly {

namespace {

// sigma_r^i on F_q.
Element twist(const Field& Fq, const FieldTower& T, const Element& a, std::size_t i) {
  return Fq.frobenius(a, T.e() * (i % T.k()));
}

Element untwist(const Field& Fq, const FieldTower& T, const Element& a, std::size_t i) {
  return Fq.frobenius_inverse(a, T.e() * (i % T.k()));
}

void check_same_tower(const AdditivePoly& a, const AdditivePoly& b) {
  if (!a.tower().compatible(b.tower())) throw InputError("additive polynomials live over different towers");
}

std::uint64_t checked_power(const BigInt& base, std::size_t n, std::uint64_t cap, const char* what) {
  BigInt v = 1;
  for (std::size_t i = 0; i < n; ++i) {
    v *= base;
    if (v > cap) throw BudgetExceeded(std::string(what) + ": dense degree exceeds cap " + std::to_string(cap));
  }
  return static_cast<std::uint64_t>(v);
}

}  // namespace

AdditivePoly::AdditivePoly(FieldTower tower, std::vector<Element> coeffs)
    : tower_(std::move(tower)), coeffs_(std::move(coeffs)) {
  const Field Fq = tower_.q();
  for (auto& c : coeffs_) c = Fq.embed(c);
  while (!coeffs_.empty() && Fq.is_zero(coeffs_.back())) coeffs_.pop_back();
}

AdditivePoly AdditivePoly::monomial(const FieldTower& tower, std::size_t i, const Element& c) {
  std::vector<Element> v(i + 1, tower.q().zero());
  v[i] = c;
  return AdditivePoly(tower, std::move(v));
}

Element AdditivePoly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : tower_.q().zero(); }

const Element& AdditivePoly::leading() const {
  if (coeffs_.empty()) throw InputError("zero additive polynomial has no leading coefficient");
  return coeffs_.back();
}

bool AdditivePoly::is_monic() const { return !coeffs_.empty() && tower_.q().is_one(coeffs_.back()); }

bool AdditivePoly::is_squarefree() const { return !coeffs_.empty() && !tower_.q().is_zero(coeffs_.front()); }

AdditivePoly operator+(const AdditivePoly& a, const AdditivePoly& b) {
  check_same_tower(a, b);
  const Field F = a.field();
  std::vector<Element> c = a.coeffs();
  if (c.size() < b.coeffs().size()) c.resize(b.coeffs().size(), F.zero());
  for (std::size_t i = 0; i < b.coeffs().size(); ++i) F.add_to(c[i], b.coeffs()[i]);
  return AdditivePoly(a.tower(), std::move(c));
}

AdditivePoly operator-(const AdditivePoly& a, const AdditivePoly& b) {
  check_same_tower(a, b);
  const Field F = a.field();
  std::vector<Element> c = a.coeffs();
  if (c.size() < b.coeffs().size()) c.resize(b.coeffs().size(), F.zero());
  for (std::size_t i = 0; i < b.coeffs().size(); ++i) F.sub_from(c[i], b.coeffs()[i]);
  return AdditivePoly(a.tower(), std::move(c));
}

AdditivePoly scale(const Element& c, const AdditivePoly& f) {
  const Field F = f.field();
  const Element cc = F.embed(c);
  std::vector<Element> v;
  v.reserve(f.coeffs().size());
  for (const auto& a : f.coeffs()) v.push_back(F.mul(cc, a));
  return AdditivePoly(f.tower(), std::move(v));
}

AdditivePoly make_monic(const AdditivePoly& f) {
  if (f.is_zero() || f.is_monic()) return f;
  return scale(f.field().inv(f.leading()), f);
}

AdditivePoly compose(const AdditivePoly& g, const AdditivePoly& h) {
  check_same_tower(g, h);
  const FieldTower& T = g.tower();
  const Field F = T.q();
  if (g.is_zero() || h.is_zero()) return AdditivePoly(T);
  std::vector<Element> c(g.coeffs().size() + h.coeffs().size() - 1, F.zero());
  Element tmp = F.zero();
  // sigma^i(h) depends only on i mod k.
  std::vector<std::vector<Element>> twisted(std::min<std::size_t>(T.k(), g.coeffs().size()));
  for (std::size_t s = 0; s < twisted.size(); ++s) {
    for (const auto& hj : h.coeffs()) twisted[s].push_back(twist(F, T, hj, s));
  }
  for (std::size_t i = 0; i < g.coeffs().size(); ++i) {
    if (F.is_zero(g.coeffs()[i])) continue;
    const auto& th = twisted[i % T.k()];
    for (std::size_t j = 0; j < th.size(); ++j) {
      F.mul_into(g.coeffs()[i], th[j], tmp);
      F.add_to(c[i + j], tmp);
    }
  }
  return AdditivePoly(T, std::move(c));
}

SkewDivMod right_divmod(const AdditivePoly& f, const AdditivePoly& h) {
  check_same_tower(f, h);
  if (h.is_zero()) throw InputError("right division by the zero additive polynomial");
  const FieldTower& T = f.tower();
  const Field F = T.q();
  const std::size_t b = static_cast<std::size_t>(h.exponent());
  if (f.exponent() < h.exponent()) return {AdditivePoly(T), f};
  std::vector<Element> r = f.coeffs();
  std::vector<Element> g(r.size() - b, F.zero());
  const std::size_t period = std::min<std::size_t>(T.k(), g.size());
  std::vector<std::vector<Element>> twisted(period);
  std::vector<Element> inv_lead(period);
  for (std::size_t s = 0; s < period; ++s) {
    for (const auto& hj : h.coeffs()) twisted[s].push_back(twist(F, T, hj, s));
    inv_lead[s] = F.inv(twisted[s][b]);
  }
  Element tmp = F.zero();
  for (std::size_t a = r.size(); a-- > b;) {
    if (F.is_zero(r[a])) continue;
    const std::size_t s = a - b;
    const auto& th = twisted[s % T.k()];
    const Element c = F.mul(r[a], inv_lead[s % T.k()]);
    g[s] = c;
    for (std::size_t j = 0; j <= b; ++j) {
      F.mul_into(c, th[j], tmp);
      F.sub_from(r[s + j], tmp);
    }
  }
  r.resize(b);
  return {AdditivePoly(T, std::move(g)), AdditivePoly(T, std::move(r))};
}

SkewDivMod left_divmod(const AdditivePoly& f, const AdditivePoly& h) {
  check_same_tower(f, h);
  if (h.is_zero()) throw InputError("left division by the zero additive polynomial");
  const FieldTower& T = f.tower();
  const Field F = T.q();
  const std::size_t b = static_cast<std::size_t>(h.exponent());
  if (f.exponent() < h.exponent()) return {AdditivePoly(T), f};
  std::vector<Element> r = f.coeffs();
  std::vector<Element> g(r.size() - b, F.zero());
  const Element inv_lead = F.inv(h.leading());
  Element tmp = F.zero();
  for (std::size_t a = r.size(); a-- > b;) {
    if (F.is_zero(r[a])) continue;
    const std::size_t s = a - b;
    // h_b * sigma^b(g_s) = r_a
    const Element gs = untwist(F, T, F.mul(r[a], inv_lead), b);
    g[s] = gs;
    for (std::size_t i = 0; i <= b; ++i) {
      if (F.is_zero(h.coeffs()[i])) continue;
      F.mul_into(h.coeffs()[i], twist(F, T, gs, i), tmp);
      F.sub_from(r[i + s], tmp);
    }
  }
  r.resize(b);
  return {AdditivePoly(T, std::move(g)), AdditivePoly(T, std::move(r))};
}

AdditivePoly gcrc(const AdditivePoly& f, const AdditivePoly& g) {
  if (f.is_zero() && g.is_zero()) throw InputError("gcrc of two zero polynomials");
  AdditivePoly a = f, b = g;
  while (!b.is_zero()) {
    AdditivePoly r = right_divmod(a, b).remainder;
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(a);
}

bool is_central(const AdditivePoly& f) {
  const FieldTower& T = f.tower();
  const Field Fr = T.r();
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    const Element& a = f.coeffs()[i];
    if (i % T.k() != 0) {
      if (!T.q().is_zero(a)) return false;
    } else if (!Fr.contains(a)) {
      return false;
    }
  }
  return true;
}

AdditivePoly mclc(const AdditivePoly& f) {
  if (!f.is_monic() || !f.is_squarefree()) throw InputError("mclc needs a monic squarefree polynomial");
  if (f.exponent() < 1) throw InputError("mclc needs exponent at least 1");
  const FieldTower& T = f.tower();
  const Field Fq = T.q(), Fr = T.r();
  const std::size_t n = static_cast<std::size_t>(f.exponent());
  const std::size_t k = T.k(), e = T.e();
  const std::size_t length = n * k;

  IncrementalEliminator elim(Fr, length);
  // rem = x^(q^i) mod_right f; x^q o rem is rem shifted by k places because
  // sigma_q fixes F_q.
  AdditivePoly rem = AdditivePoly::identity(T);
  std::vector<Element> flat(length, Fr.zero());
  for (std::size_t i = 0; i <= length; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Element c = rem.coeff(j);
      for (std::size_t b = 0; b < k; ++b) {
        Element& dst = flat[j * k + b];
        std::copy(c.coords.begin() + static_cast<long>(b * e), c.coords.begin() + static_cast<long>((b + 1) * e),
                  dst.coords.begin());
      }
    }
    if (auto dep = elim.add(flat)) {
      std::vector<Element> coeffs(dep->size() == 0 ? 0 : (dep->size() - 1) * k + 1, Fq.zero());
      for (std::size_t j = 0; j < dep->size(); ++j) coeffs[j * k] = Fq.embed((*dep)[j]);
      AdditivePoly fstar(T, std::move(coeffs));
      if (!right_divmod(fstar, f).remainder.is_zero()) {
        throw InternalInconsistency("mclc: dependence does not give a left multiple");
      }
      return fstar;
    }
    std::vector<Element> shifted(k, Fq.zero());
    shifted.insert(shifted.end(), rem.coeffs().begin(), rem.coeffs().end());
    rem = right_divmod(AdditivePoly(T, std::move(shifted)), f).remainder;
  }
  throw InternalInconsistency("mclc: no dependence within n * [F_q : F_r] steps");
}

UPoly tau(const AdditivePoly& c) {
  const FieldTower& T = c.tower();
  const Field Fr = T.r();
  std::vector<Element> u;
  for (std::size_t i = 0; i < c.coeffs().size(); ++i) {
    const Element& a = c.coeffs()[i];
    if (i % T.k() != 0) {
      if (!T.q().is_zero(a)) throw NotCentral("tau: coefficient at a non-q-power exponent");
      continue;
    }
    if (!Fr.contains(a)) throw NotCentral("tau: coefficient outside F_r");
    u.push_back(Fr.coerce(a));
  }
  return UPoly(Fr, std::move(u));
}

AdditivePoly tau_inv(const FieldTower& T, const UPoly& u) {
  if (u.field().level() != Level::r) throw InputError("tau_inv expects a polynomial over F_r");
  const Field Fq = T.q();
  if (u.is_zero()) return AdditivePoly(T);
  std::vector<Element> c(static_cast<std::size_t>(u.degree()) * T.k() + 1, Fq.zero());
  for (std::size_t i = 0; i < u.coeffs().size(); ++i) c[i * T.k()] = Fq.embed(u.coeffs()[i]);
  return AdditivePoly(T, std::move(c));
}

std::pair<std::size_t, AdditivePoly> strip_inseparable(const AdditivePoly& fbar) {
  if (fbar.is_zero()) throw InputError("strip_inseparable of the zero polynomial");
  const FieldTower& T = fbar.tower();
  const Field F = T.q();
  std::size_t m = 0;
  while (F.is_zero(fbar.coeffs()[m])) ++m;
  std::vector<Element> c;
  for (std::size_t j = m; j < fbar.coeffs().size(); ++j) c.push_back(untwist(F, T, fbar.coeffs()[j], m));
  return {m, AdditivePoly(T, std::move(c))};
}

UPoly pi_t(const AdditivePoly& f, std::uint64_t t, std::uint64_t degree_cap) {
  const FieldTower& T = f.tower();
  const Field F = T.q();
  const BigInt r = T.r_value();
  if (t == 0 || (r - 1) % t != 0) throw InputError("pi_t: t must divide r - 1");
  if (f.is_zero()) return UPoly(F);
  const std::size_t n = static_cast<std::size_t>(f.exponent());
  const std::uint64_t top = (checked_power(r, n, degree_cap * t + 1, "pi_t") - 1) / t;
  if (top > degree_cap) throw BudgetExceeded("pi_t: dense degree exceeds cap");
  std::vector<Element> c(top + 1, F.zero());
  std::uint64_t ri = 1;
  const auto rr = static_cast<std::uint64_t>(r);
  for (std::size_t i = 0; i <= n; ++i) {
    c[(ri - 1) / t] = f.coeffs()[i];
    ri *= rr;
  }
  return UPoly(F, std::move(c));
}

UPoly rho_t(const AdditivePoly& f, std::uint64_t t, std::uint64_t degree_cap) {
  const UPoly pi = pi_t(f, t, degree_cap);
  const Field F = pi.field();
  if (pi.is_zero()) return pi;
  if (static_cast<std::uint64_t>(pi.degree()) * t + 1 > degree_cap) throw BudgetExceeded("rho_t: dense degree exceeds cap");
  UPoly acc = UPoly::variable(F);
  for (std::uint64_t i = 0; i < t; ++i) acc = acc * pi;
  return acc;
}

UPoly expand(const AdditivePoly& f, std::uint64_t degree_cap) {
  const FieldTower& T = f.tower();
  const Field F = T.q();
  if (f.is_zero()) return UPoly(F);
  const std::size_t n = static_cast<std::size_t>(f.exponent());
  const std::uint64_t top = checked_power(T.r_value(), n, degree_cap, "expand");
  std::vector<Element> c(top + 1, F.zero());
  std::uint64_t ri = 1;
  const auto rr = static_cast<std::uint64_t>(T.r_value());
  for (std::size_t i = 0; i <= n; ++i) {
    c[ri] = f.coeffs()[i];
    ri *= rr;
  }
  return UPoly(F, std::move(c));
}

Element evaluate(const AdditivePoly& f, const Field& F, const Element& alpha) {
  const FieldTower& T = f.tower();
  if (static_cast<int>(F.level()) < static_cast<int>(Level::q)) {
    throw InputError("evaluate: the point must lie in F_q or an extension of it");
  }
  if (F.level() == Level::q ? !F.same_as(T.q()) : !F.tower().compatible(T)) {
    throw InputError("evaluate: field does not extend the polynomial's F_q");
  }
  const Element a = F.embed(alpha);
  Element acc = F.zero();
  Element cur = a;
  Element tmp = F.zero();
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    if (i > 0) cur = F.frobenius(cur, T.e());
    if (T.q().is_zero(f.coeffs()[i])) continue;
    F.mul_into(F.embed(f.coeffs()[i]), cur, tmp);
    F.add_to(acc, tmp);
  }
  return acc;
}

std::string to_string(const AdditivePoly& f) {
  if (f.is_zero()) return "0";
  const Field F = f.field();
  const std::string r = f.tower().r_value().str();
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = f.coeffs().size(); i-- > 0;) {
    const Element& c = f.coeffs()[i];
    if (F.is_zero(c)) continue;
    if (!first) os << "+";
    first = false;
    if (!F.is_one(c)) {
      if (F.degree() == 1) {
        os << c.coords[0] << "*";
      } else {
        os << "[" << F.index(c) << "]*";
      }
    }
    os << "x";
    if (i == 1) os << "^" << r;
    if (i > 1) os << "^(" << r << "^" << i << ")";
  }
  return os.str();
}

}  // namespace addpoly
