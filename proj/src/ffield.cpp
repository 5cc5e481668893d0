#include "addpoly/ffield.hpp"

#include <algorithm>
#include <cassert>
#include <string>

#include "addpoly/error.hpp"
#include "addpoly/upoly.hpp"

namespace addpoly {
namespace detail {

struct LevelData {
  std::size_t rel = 1;       // degree over the level below
  std::size_t deg = 1;       // degree over F_p
  std::size_t base_deg = 1;  // degree of the level below over F_p
  std::vector<Element> modulus;
  // Low coefficients of the monic modulus, flattened: rel blocks of base_deg.
  std::vector<Digit> mod_digits;
  // frob[t - 1] is sigma_p^t as a row-major deg x deg matrix over F_p. Either
  // every power below deg is stored, or only t = 1 (large levels).
  std::vector<std::vector<Digit>> frob;
};

struct TowerData {
  Digit p = 2;
  std::size_t e = 1;
  std::size_t k = 1;
  std::vector<LevelData> levels;
};

}  // namespace detail

namespace {

using detail::LevelData;
using detail::TowerData;

constexpr std::size_t kFullFrobeniusTableLimit = 64;

inline std::size_t idx(Level level) { return static_cast<std::size_t>(level); }

bool all_zero(const Digit* a, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] != 0) return false;
  }
  return true;
}

inline void add_digits(Digit* acc, const Digit* x, std::size_t n, Digit p) {
  if (n >= 16) {
    kernels::active().add_mod({acc, n}, {x, n}, p);
    return;
  }
  for (std::size_t i = 0; i < n; ++i) {
    Digit s = acc[i] + x[i];
    acc[i] = (s >= p || s < acc[i]) ? s - p : s;
  }
}

inline void sub_digits(Digit* acc, const Digit* x, std::size_t n, Digit p) {
  if (n >= 16) {
    kernels::active().sub_mod({acc, n}, {x, n}, p);
    return;
  }
  for (std::size_t i = 0; i < n; ++i) {
    acc[i] = acc[i] >= x[i] ? acc[i] - x[i] : static_cast<Digit>(std::uint64_t{acc[i]} + p - x[i]);
  }
}

// Schoolbook product followed by reduction modulo the level's construction
// polynomial; coefficients recurse into the level below.
void mul_rec(const TowerData& T, std::size_t L, const Digit* a, const Digit* b, Digit* out) {
  const Digit p = T.p;
  while (L > 0 && T.levels[L].rel == 1) --L;
  if (L == 0) {
    out[0] = static_cast<Digit>(std::uint64_t{a[0]} * b[0] % p);
    return;
  }
  const LevelData& ld = T.levels[L];
  const std::size_t D = ld.rel;
  const std::size_t M = ld.base_deg;
  const Digit* mod = ld.mod_digits.data();

  if (M == 1) {
    boost::container::small_vector<std::uint64_t, 32> prod(2 * D - 1, 0);
    for (std::size_t i = 0; i < D; ++i) {
      if (a[i] == 0) continue;
      for (std::size_t j = 0; j < D; ++j) {
        prod[i + j] = (prod[i + j] + std::uint64_t{a[i]} * b[j]) % p;
      }
    }
    for (std::size_t t = 2 * D - 1; t-- > D;) {
      const std::uint64_t c = prod[t];
      if (c == 0) continue;
      const std::uint64_t nc = p - c;
      for (std::size_t j = 0; j < D; ++j) {
        prod[t - D + j] = (prod[t - D + j] + nc * mod[j]) % p;
      }
    }
    for (std::size_t i = 0; i < D; ++i) out[i] = static_cast<Digit>(prod[i]);
    return;
  }

  boost::container::small_vector<Digit, 64> prod((2 * D - 1) * M, 0);
  boost::container::small_vector<Digit, 16> tmp(M);
  for (std::size_t i = 0; i < D; ++i) {
    if (all_zero(a + i * M, M)) continue;
    for (std::size_t j = 0; j < D; ++j) {
      if (all_zero(b + j * M, M)) continue;
      mul_rec(T, L - 1, a + i * M, b + j * M, tmp.data());
      add_digits(prod.data() + (i + j) * M, tmp.data(), M, p);
    }
  }
  for (std::size_t t = 2 * D - 1; t-- > D;) {
    const Digit* c = prod.data() + t * M;
    if (all_zero(c, M)) continue;
    for (std::size_t j = 0; j < D; ++j) {
      mul_rec(T, L - 1, c, mod + j * M, tmp.data());
      sub_digits(prod.data() + (t - D + j) * M, tmp.data(), M, p);
    }
  }
  std::copy_n(prod.begin(), D * M, out);
}

void matvec(const std::vector<Digit>& m, std::size_t n, const Digit* x, Digit* out, Digit p) {
  const auto& ks = kernels::active();
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = ks.dot_mod({m.data() + i * n, n}, {x, n}, p);
  }
}

void pow_digits(const TowerData& T, std::size_t L, const Digit* a, std::uint64_t e, Digit* out) {
  const std::size_t n = T.levels[L].deg;
  Coords base(a, a + n);
  Coords acc(n, 0);
  acc[0] = 1;
  Coords tmp(n);
  while (e > 0) {
    if (e & 1U) {
      mul_rec(T, L, acc.data(), base.data(), tmp.data());
      acc.swap(tmp);
    }
    e >>= 1U;
    if (e > 0) {
      mul_rec(T, L, base.data(), base.data(), tmp.data());
      base.swap(tmp);
    }
  }
  std::copy(acc.begin(), acc.end(), out);
}

void frob_digits(const TowerData& T, std::size_t L, const Digit* a, std::uint64_t t, Digit* out) {
  const LevelData& ld = T.levels[L];
  const std::size_t n = ld.deg;
  t %= n;
  if (t == 0 || n == 1) {
    std::copy_n(a, n, out);
    return;
  }
  if (ld.frob.size() + 1 == n) {
    matvec(ld.frob[t - 1], n, a, out, T.p);
    return;
  }
  Coords cur(a, a + n);
  for (std::uint64_t s = 0; s < t; ++s) {
    matvec(ld.frob[0], n, cur.data(), out, T.p);
    std::copy_n(out, n, cur.begin());
  }
}

void build_frobenius_tables(TowerData& T, std::size_t L) {
  LevelData& ld = T.levels[L];
  const std::size_t n = ld.deg;
  ld.frob.clear();
  if (n == 1) return;
  // Columns of sigma_p are the p-th powers of the digit basis vectors.
  std::vector<Coords> cols(n, Coords(n, 0));
  for (std::size_t j = 0; j < n; ++j) {
    Coords unit(n, 0);
    unit[j] = 1;
    pow_digits(T, L, unit.data(), T.p, cols[j].data());
  }
  auto to_rows = [n](const std::vector<Coords>& c) {
    std::vector<Digit> m(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m[i * n + j] = c[j][i];
    return m;
  };
  ld.frob.push_back(to_rows(cols));
  if (n > kFullFrobeniusTableLimit) return;
  for (std::size_t t = 2; t < n; ++t) {
    for (auto& col : cols) {
      Coords next(n);
      matvec(ld.frob[0], n, col.data(), next.data(), T.p);
      col = std::move(next);
    }
    ld.frob.push_back(to_rows(cols));
  }
}

void push_level(TowerData& T, std::vector<Element> modulus) {
  LevelData ld;
  const LevelData& below = T.levels.back();
  ld.rel = modulus.size() - 1;
  ld.base_deg = below.deg;
  ld.deg = ld.rel * below.deg;
  ld.mod_digits.reserve(ld.rel * ld.base_deg);
  for (std::size_t i = 0; i < ld.rel; ++i) {
    ld.mod_digits.insert(ld.mod_digits.end(), modulus[i].coords.begin(), modulus[i].coords.end());
  }
  ld.modulus = std::move(modulus);
  T.levels.push_back(std::move(ld));
  build_frobenius_tables(T, T.levels.size() - 1);
}

}  // namespace

const char* level_name(Level level) noexcept {
  switch (level) {
    case Level::prime: return "prime";
    case Level::r: return "r";
    case Level::q: return "q";
    case Level::ext: return "ext";
  }
  return "?";
}

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

BigInt digits_value(std::span<const Digit> digits, Digit p) {
  BigInt v = 0;
  for (std::size_t i = digits.size(); i-- > 0;) v = v * p + digits[i];
  return v;
}

// ---------------------------------------------------------------------------
// Field

Digit Field::characteristic() const noexcept { return data_->p; }
std::size_t Field::degree() const noexcept { return data_->levels[idx(level_)].deg; }
std::size_t Field::relative_degree() const noexcept { return data_->levels[idx(level_)].rel; }

Field Field::base() const {
  if (level_ == Level::prime) return *this;
  return Field(data_, static_cast<Level>(idx(level_) - 1));
}

FieldTower Field::tower() const { return FieldTower(data_); }

std::optional<std::uint64_t> Field::cardinality() const noexcept {
  std::uint64_t v = 1;
  for (std::size_t i = 0; i < degree(); ++i) {
    if (v > UINT64_MAX / data_->p) return std::nullopt;
    v *= data_->p;
  }
  return v;
}

BigInt Field::order() const {
  BigInt v = 1;
  for (std::size_t i = 0; i < degree(); ++i) v *= data_->p;
  return v;
}

void Field::check(const Element& x) const {
  if (x.level != level_ || x.coords.size() != degree()) {
    throw InputError(std::string("element at level ") + level_name(x.level) + " used in field at level " +
                     level_name(level_));
  }
}

Element Field::zero() const { return Element{level_, Coords(degree(), 0)}; }

Element Field::one() const {
  Element x = zero();
  x.coords[0] = 1;
  return x;
}

Element Field::from_int(std::int64_t v) const {
  Element x = zero();
  const auto p = static_cast<std::int64_t>(data_->p);
  x.coords[0] = static_cast<Digit>(((v % p) + p) % p);
  return x;
}

Element Field::embed(const Element& x) const {
  if (idx(x.level) > idx(level_)) {
    throw InputError(std::string("cannot embed level ") + level_name(x.level) + " into " + level_name(level_));
  }
  Element y{level_, x.coords};
  y.coords.resize(degree(), 0);
  return y;
}

bool Field::contains(const Element& x) const {
  if (idx(x.level) <= idx(level_)) return true;
  for (std::size_t i = degree(); i < x.coords.size(); ++i) {
    if (x.coords[i] != 0) return false;
  }
  return true;
}

Element Field::coerce(const Element& x) const {
  if (idx(x.level) <= idx(level_)) return embed(x);
  if (!contains(x)) {
    throw NotInSubfield(std::string("element of level ") + level_name(x.level) + " does not lie in level " +
                        level_name(level_));
  }
  return Element{level_, Coords(x.coords.begin(), x.coords.begin() + static_cast<std::ptrdiff_t>(degree()))};
}

bool Field::is_zero(const Element& x) const { return all_zero(x.coords.data(), x.coords.size()); }

bool Field::is_one(const Element& x) const {
  return !x.coords.empty() && x.coords[0] == 1 && all_zero(x.coords.data() + 1, x.coords.size() - 1);
}

Element Field::add(const Element& a, const Element& b) const {
  check(a);
  check(b);
  Element c = a;
  add_digits(c.coords.data(), b.coords.data(), degree(), data_->p);
  return c;
}

Element Field::sub(const Element& a, const Element& b) const {
  check(a);
  check(b);
  Element c = a;
  sub_digits(c.coords.data(), b.coords.data(), degree(), data_->p);
  return c;
}

Element Field::neg(const Element& a) const { return sub(zero(), a); }

Element Field::mul(const Element& a, const Element& b) const {
  check(a);
  check(b);
  Element c{level_, Coords(degree())};
  mul_rec(*data_, idx(level_), a.coords.data(), b.coords.data(), c.coords.data());
  return c;
}

// a^(p^N - 2) = a^(p-2) * prod_{i=1}^{N-1} sigma^i(a^(p-1)), using the digit
// expansion p^N - 2 = (p - 2) + sum_{i>=1} (p - 1) p^i.
Element Field::inv(const Element& a) const {
  check(a);
  if (is_zero(a)) throw InputError("division by zero");
  const std::size_t n = degree();
  const std::size_t L = idx(level_);
  Element result{level_, Coords(n)};
  pow_digits(*data_, L, a.coords.data(), data_->p - 2, result.coords.data());
  if (n == 1) return result;
  Coords t(n), s(n), tmp(n);
  pow_digits(*data_, L, a.coords.data(), data_->p - 1, t.data());
  for (std::size_t i = 1; i < n; ++i) {
    frob_digits(*data_, L, t.data(), i, s.data());
    mul_rec(*data_, L, result.coords.data(), s.data(), tmp.data());
    std::copy(tmp.begin(), tmp.end(), result.coords.begin());
  }
  return result;
}

Element Field::div(const Element& a, const Element& b) const { return mul(a, inv(b)); }

Element Field::pow(const Element& a, std::uint64_t e) const {
  check(a);
  Element c{level_, Coords(degree())};
  pow_digits(*data_, idx(level_), a.coords.data(), e, c.coords.data());
  return c;
}

Element Field::pow(const Element& a, const BigInt& e) const {
  if (e < 0) return pow(inv(a), BigInt(-e));
  Element acc = one();
  Element base = a;
  const std::size_t bits = e == 0 ? 0 : boost::multiprecision::msb(e) + 1;
  for (std::size_t i = 0; i < bits; ++i) {
    if (boost::multiprecision::bit_test(e, static_cast<unsigned>(i))) acc = mul(acc, base);
    if (i + 1 < bits) base = mul(base, base);
  }
  return acc;
}

Element Field::frobenius(const Element& a, std::uint64_t t) const {
  check(a);
  Element c{level_, Coords(degree())};
  frob_digits(*data_, idx(level_), a.coords.data(), t, c.coords.data());
  return c;
}

Element Field::frobenius_inverse(const Element& a, std::uint64_t t) const {
  const std::uint64_t n = degree();
  return frobenius(a, (n - t % n) % n);
}

Element Field::random(std::mt19937_64& rng) const {
  std::uniform_int_distribution<Digit> dist(0, data_->p - 1);
  Element x = zero();
  for (auto& d : x.coords) d = dist(rng);
  return x;
}

Element Field::element(std::uint64_t index) const {
  Element x = zero();
  for (auto& d : x.coords) {
    d = static_cast<Digit>(index % data_->p);
    index /= data_->p;
  }
  return x;
}

std::uint64_t Field::index(const Element& a) const {
  std::uint64_t v = 0;
  for (std::size_t i = a.coords.size(); i-- > 0;) v = v * data_->p + a.coords[i];
  return v;
}

void Field::add_to(std::span<Digit> acc, std::span<const Digit> x) const {
  add_digits(acc.data(), x.data(), degree(), data_->p);
}

void Field::sub_from(std::span<Digit> acc, std::span<const Digit> x) const {
  sub_digits(acc.data(), x.data(), degree(), data_->p);
}

void Field::mul_into(std::span<const Digit> a, std::span<const Digit> b, std::span<Digit> out) const {
  mul_rec(*data_, idx(level_), a.data(), b.data(), out.data());
}

void Field::frobenius_into(std::span<const Digit> a, std::uint64_t t, std::span<Digit> out) const {
  frob_digits(*data_, idx(level_), a.data(), t, out.data());
}

bool Field::same_as(const Field& other) const noexcept {
  if (level_ != other.level_) return false;
  if (data_ == other.data_) return true;
  return FieldTower(data_).compatible(FieldTower(other.data_)) &&
         (level_ != Level::ext || data_->levels[3].modulus == other.data_->levels[3].modulus);
}

// ---------------------------------------------------------------------------
// FieldTower

namespace {

std::vector<Element> smallest_irreducible(const Field& base, std::size_t degree) {
  std::vector<Element> coeffs(degree + 1, base.zero());
  coeffs[degree] = base.one();
  if (degree == 1) return coeffs;  // y
  const auto card = base.cardinality();
  if (!card) throw Overflow("base field too large for construction polynomial search");
  // Odometer with a_0 as the most significant position.
  std::vector<std::uint64_t> digits(degree, 0);
  digits[0] = 1;  // a_0 = 0 means y divides the candidate
  while (true) {
    for (std::size_t i = 0; i < degree; ++i) coeffs[i] = base.element(digits[i]);
    if (is_irreducible(UPoly(base, coeffs))) return coeffs;
    std::size_t pos = degree;
    while (pos-- > 0) {
      if (++digits[pos] < *card) break;
      digits[pos] = 0;
    }
    if (pos == static_cast<std::size_t>(-1)) {
      throw InternalInconsistency("no irreducible polynomial found");
    }
  }
}

std::vector<Element> checked_modulus(const Field& base, std::size_t degree, const std::vector<Element>& given,
                                     const char* name) {
  if (given.size() != degree + 1) {
    throw InputError(std::string(name) + ": expected degree " + std::to_string(degree) + ", got " +
                     std::to_string(given.empty() ? 0 : given.size() - 1));
  }
  std::vector<Element> coeffs;
  coeffs.reserve(given.size());
  for (const auto& c : given) {
    if (c.coords.size() != base.degree()) throw InputError(std::string(name) + ": coefficient has wrong size");
    coeffs.push_back(Element{base.level(), c.coords});
    for (Digit d : c.coords) {
      if (d >= base.characteristic()) throw InputError(std::string(name) + ": digit out of range");
    }
  }
  if (!base.is_one(coeffs.back())) throw InputError(std::string(name) + ": not monic");
  if (!is_irreducible(UPoly(base, coeffs))) throw InputError(std::string(name) + ": reducible");
  return coeffs;
}

}  // namespace

FieldTower FieldTower::create(Digit p, std::size_t e, std::size_t k, const TowerOverrides& overrides) {
  if (!is_prime(p)) throw InputError("p = " + std::to_string(p) + " is not prime");
  if (e < 1 || k < 1) throw InputError("extension degrees e and k must be positive");

  auto data = std::make_shared<TowerData>();
  data->p = p;
  data->e = e;
  data->k = k;
  data->levels.push_back(LevelData{});

  for (Level level : {Level::r, Level::q}) {
    auto partial = std::make_shared<const TowerData>(*data);
    Field base(partial, static_cast<Level>(idx(level) - 1));
    const std::size_t degree = level == Level::r ? e : k;
    const auto& given = level == Level::r ? overrides.m_r : overrides.m_q;
    auto modulus = given ? checked_modulus(base, degree, *given, level == Level::r ? "m_r" : "m_q")
                         : smallest_irreducible(base, degree);
    push_level(*data, std::move(modulus));
  }
  return FieldTower(std::move(data));
}

FieldTower FieldTower::with_extension(std::size_t ext_degree, std::optional<std::vector<Element>> m_ext) const {
  if (ext_degree < 1) throw InputError("extension degree must be positive");
  auto data = std::make_shared<TowerData>(*data_);
  data->levels.resize(3);
  auto partial = std::make_shared<const TowerData>(*data);
  Field base(partial, Level::q);
  auto modulus = m_ext ? checked_modulus(base, ext_degree, *m_ext, "m_ext") : smallest_irreducible(base, ext_degree);
  push_level(*data, std::move(modulus));
  return FieldTower(std::move(data));
}

Field FieldTower::field(Level level) const {
  if (idx(level) >= data_->levels.size()) throw InputError("tower has no extension level");
  return Field(data_, level);
}

Digit FieldTower::p() const noexcept { return data_->p; }
std::size_t FieldTower::e() const noexcept { return data_->e; }
std::size_t FieldTower::k() const noexcept { return data_->k; }
bool FieldTower::has_extension() const noexcept { return data_->levels.size() > 3; }
std::size_t FieldTower::ext_degree() const noexcept { return has_extension() ? data_->levels[3].rel : 1; }

const std::vector<Element>& FieldTower::modulus(Level level) const {
  if (level == Level::prime || idx(level) >= data_->levels.size()) {
    throw InputError(std::string("no construction polynomial at level ") + level_name(level));
  }
  return data_->levels[idx(level)].modulus;
}

Element FieldTower::subfield_coerce(const Element& x) const {
  if (x.level != Level::q) throw InputError("subfield_coerce expects an element of F_q");
  return r().coerce(x);
}

Element FieldTower::frobenius(const Element& x, const BigInt& s) const {
  if (s < 1) throw InputError("Frobenius exponent must be a positive power of p");
  BigInt rest = s;
  BigInt t = 0;
  while (rest % data_->p == 0) {
    rest /= data_->p;
    ++t;
  }
  if (rest != 1) throw InputError("Frobenius exponent is not a power of p");
  const Field F = field(x.level);
  const auto reduced = static_cast<std::uint64_t>(t % F.degree());
  return F.frobenius(x, reduced);
}

BigInt FieldTower::r_value() const { return r().order(); }
BigInt FieldTower::q_value() const { return q().order(); }

bool FieldTower::compatible(const FieldTower& other) const noexcept {
  if (data_ == other.data_) return true;
  if (data_->p != other.data_->p || data_->e != other.data_->e || data_->k != other.data_->k) return false;
  return data_->levels[1].modulus == other.data_->levels[1].modulus &&
         data_->levels[2].modulus == other.data_->levels[2].modulus;
}

}  // namespace addpoly
