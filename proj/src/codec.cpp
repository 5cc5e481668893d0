#include "addpoly/codec.hpp"

#include <set>

#include "addpoly/error.hpp"

namespace addpoly {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) { throw InputError(where + ": " + what); }

std::uint64_t get_uint(const Json& j, const std::string& where) {
  if (!j.is_number_integer() || (j.is_number_integer() && !j.is_number_unsigned() && j.get<std::int64_t>() < 0))
    fail(where, "expected a nonnegative integer");
  return j.get<std::uint64_t>();
}

long get_long(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) fail(where, "expected an integer");
  return j.get<long>();
}

Element element_from_digits(const Field& F, std::span<const Digit> digits) {
  Element x = F.zero();
  std::copy(digits.begin(), digits.end(), x.coords.begin());
  return x;
}

}  // namespace

Json encode_big(const BigInt& v) {
  if (v >= 0 && v <= std::numeric_limits<std::uint64_t>::max()) return Json(static_cast<std::uint64_t>(v));
  return Json(v.str());
}

Json encode_element(const Field& F, const Element& x) {
  if (F.level() == Level::prime) return Json(static_cast<std::uint64_t>(x.coords[0]));
  const Field inner = F.base();
  const std::size_t rel = F.relative_degree();
  const std::size_t w = inner.degree();
  if (rel == 1) return encode_element(inner, element_from_digits(inner, {x.coords.data(), w}));
  Json out = Json::array();
  for (std::size_t b = 0; b < rel; ++b) out.push_back(encode_element(inner, element_from_digits(inner, {x.coords.data() + b * w, w})));
  return out;
}

Element decode_element(const Field& F, const Json& j, const std::string& where) {
  if (j.is_number()) {
    const std::uint64_t c = get_uint(j, where);
    if (c >= F.characteristic()) fail(where, "integer " + std::to_string(c) + " is not below p = " + std::to_string(F.characteristic()));
    Element x = F.zero();
    x.coords[0] = static_cast<Digit>(c);
    return x;
  }
  if (F.level() == Level::prime) fail(where, "expected an integer");
  const Field inner = F.base();
  const std::size_t rel = F.relative_degree();
  if (rel == 1) return F.embed(decode_element(inner, j, where));
  if (!j.is_array()) fail(where, "expected an integer or an array of " + std::to_string(rel) + " entries");
  if (j.size() != rel)
    fail(where, "expected " + std::to_string(rel) + " entries, got " + std::to_string(j.size()));
  Element x = F.zero();
  const std::size_t w = inner.degree();
  for (std::size_t b = 0; b < rel; ++b) {
    const Element c = decode_element(inner, j[b], where + "[" + std::to_string(b) + "]");
    std::copy(c.coords.begin(), c.coords.end(), x.coords.begin() + static_cast<long>(b * w));
  }
  return x;
}

Json encode_upoly(const UPoly& u) {
  Json out = Json::array();
  for (const auto& c : u.coeffs()) out.push_back(encode_element(u.field(), c));
  return out;
}

Json encode_additive(const AdditivePoly& f) {
  Json coeffs = Json::array();
  for (const auto& c : f.coeffs()) coeffs.push_back(encode_element(f.field(), c));
  return Json{{"r_exp", f.tower().e()}, {"coeffs", coeffs}};
}

AdditivePoly decode_additive(const FieldTower& T, const Json& j, const std::string& where) {
  const Field F = T.q();
  if (j.is_array()) return decode_additive(T, Json{{"coeffs", j}}, where);
  if (!j.is_object()) fail(where, "expected an object with \"coeffs\" or \"terms\"");
  for (const auto& [key, _] : j.items())
    if (key != "r_exp" && key != "coeffs" && key != "terms") fail(where + "." + key, "unknown key");
  if (j.contains("r_exp") && get_uint(j["r_exp"], where + ".r_exp") != T.e())
    fail(where + ".r_exp", "does not match e = " + std::to_string(T.e()));
  if (j.contains("coeffs") == j.contains("terms")) fail(where, "give exactly one of \"coeffs\" and \"terms\"");
  std::vector<Element> coeffs;
  if (j.contains("coeffs")) {
    const Json& c = j["coeffs"];
    if (!c.is_array()) fail(where + ".coeffs", "expected an array");
    for (std::size_t i = 0; i < c.size(); ++i)
      coeffs.push_back(decode_element(F, c[i], where + ".coeffs[" + std::to_string(i) + "]"));
  } else {
    const Json& t = j["terms"];
    if (!t.is_array()) fail(where + ".terms", "expected an array of [i, c] pairs");
    std::set<std::uint64_t> seen;
    for (std::size_t i = 0; i < t.size(); ++i) {
      const std::string at = where + ".terms[" + std::to_string(i) + "]";
      if (!t[i].is_array() || t[i].size() != 2) fail(at, "expected a pair [i, c]");
      const std::uint64_t idx = get_uint(t[i][0], at + "[0]");
      if (idx > 1'000'000) fail(at + "[0]", "exponent too large");
      if (!seen.insert(idx).second) fail(at, "repeated exponent " + std::to_string(idx));
      if (coeffs.size() <= idx) coeffs.resize(idx + 1, F.zero());
      coeffs[idx] = decode_element(F, t[i][1], at + "[1]");
    }
  }
  return AdditivePoly(T, std::move(coeffs));
}

Json encode_species(const Species& s) {
  Json out = Json::array();
  for (const auto& sig : s.entries()) out.push_back(Json::array({sig.m, sig.lambdas}));
  return out;
}

Species decode_species(const Json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array of [m, [lambda...]] pairs");
  std::vector<Signature> sigs;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string at = where + "[" + std::to_string(i) + "]";
    if (!j[i].is_array() || j[i].size() != 2 || !j[i][1].is_array()) fail(at, "expected [m, [lambda...]]");
    Signature s{get_uint(j[i][0], at + "[0]"), {}};
    if (s.m == 0) fail(at + "[0]", "degree must be positive");
    for (std::size_t k = 0; k < j[i][1].size(); ++k) s.lambdas.push_back(get_uint(j[i][1][k], at + "[1][" + std::to_string(k) + "]"));
    sigs.push_back(std::move(s));
  }
  return Species(std::move(sigs));
}

Json encode_sparse(const UPoly& u) {
  Json terms = Json::array();
  for (std::size_t i = 0; i < u.coeffs().size(); ++i)
    if (!u.field().is_zero(u.coeffs()[i])) terms.push_back(Json::array({i, encode_element(u.field(), u.coeffs()[i])}));
  return Json{{"degree", u.degree()}, {"terms", terms}};
}

const FieldTower& JobSpec::require_tower() const {
  if (!tower) throw InputError("job: \"p\" is required");
  return *tower;
}

const AdditivePoly& JobSpec::require_f() const {
  if (!f) throw InputError("job: \"f\" is required");
  return *f;
}

CountBudget JobSpec::count_budget() const {
  CountBudget b;
  b.dim_budget = dim_budget;
  b.oracle.max_ext = max_ext;
  return b;
}

OracleBudget JobSpec::oracle_budget() const {
  OracleBudget b;
  b.max_ext = max_ext;
  return b;
}

JobSpec parse_job(const Json& j) {
  if (!j.is_object()) throw InputError("job: expected a JSON object");
  static const std::set<std::string> known{"p", "e", "k", "m_r", "m_q", "f", "d", "all", "t",
                                           "n", "r", "seed", "dim_budget", "max_ext"};
  for (const auto& [key, _] : j.items())
    if (!known.count(key)) fail(key, "unknown key");

  JobSpec job;
  if (j.contains("p")) {
    const std::uint64_t p = get_uint(j["p"], "p");
    if (p < 2 || p > 65521 || !is_prime(p)) fail("p", "expected a prime below 2^16");
    const std::uint64_t e = j.contains("e") ? get_uint(j["e"], "e") : 1;
    const std::uint64_t k = j.contains("k") ? get_uint(j["k"], "k") : 1;
    if (e < 1 || e > 64) fail("e", "expected 1..64");
    if (k < 1 || k > 64) fail("k", "expected 1..64");
    TowerOverrides ov;
    const FieldTower plain = FieldTower::create(static_cast<Digit>(p), e, 1);
    auto read_modulus = [&](const char* key, const Field& F) {
      const Json& m = j[key];
      if (!m.is_array()) fail(key, "expected an array of coefficients, little-endian");
      std::vector<Element> c;
      for (std::size_t i = 0; i < m.size(); ++i)
        c.push_back(decode_element(F, m[i], std::string(key) + "[" + std::to_string(i) + "]"));
      return c;
    };
    if (j.contains("m_r")) ov.m_r = read_modulus("m_r", plain.prime());
    if (j.contains("m_q")) {
      const FieldTower base = FieldTower::create(static_cast<Digit>(p), e, 1, TowerOverrides{ov.m_r, std::nullopt});
      ov.m_q = read_modulus("m_q", base.r());
    }
    job.tower = FieldTower::create(static_cast<Digit>(p), e, k, ov);
  } else {
    for (const char* key : {"e", "k", "m_r", "m_q", "f"})
      if (j.contains(key)) fail(key, "needs \"p\"");
  }
  if (j.contains("f")) job.f = decode_additive(*job.tower, j["f"]);
  if (j.contains("d")) job.d = get_long(j["d"], "d");
  if (j.contains("all")) {
    if (!j["all"].is_boolean()) fail("all", "expected true or false");
    job.all = j["all"].get<bool>();
  }
  if (j.contains("t")) job.t = get_uint(j["t"], "t");
  if (j.contains("n")) job.n = get_uint(j["n"], "n");
  if (j.contains("r")) {
    const Json& r = j["r"];
    if (r.is_string()) {
      try {
        job.r = BigInt(r.get<std::string>());
      } catch (const std::exception&) {
        fail("r", "not an integer");
      }
    } else {
      job.r = get_uint(r, "r");
    }
    if (*job.r < 2) fail("r", "expected at least 2");
  }
  if (j.contains("seed")) job.seed = get_uint(j["seed"], "seed");
  if (j.contains("dim_budget")) job.dim_budget = get_uint(j["dim_budget"], "dim_budget");
  if (j.contains("max_ext")) job.max_ext = get_uint(j["max_ext"], "max_ext");
  return job;
}

}  // namespace addpoly
