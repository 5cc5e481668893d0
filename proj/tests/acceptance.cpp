// One line per acceptance criterion; exit status is nonzero if any fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

#include "addpoly/commands.hpp"
#include "addpoly/error.hpp"
#include "addpoly/frobjordan.hpp"
#include "addpoly/latcount.hpp"
#include "addpoly/oracle.hpp"
#include "helpers.hpp"

using namespace addpoly;
using namespace testing;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool pass;
  std::string detail;
};

Json frob_job(std::uint64_t k, std::uint64_t n) {
  return Json{{"p", 2}, {"k", k}, {"f", Json{{"terms", Json::array({Json::array({0, 1}), Json::array({n, 1})})}}}};
}

// ---------------------------------------------------------------- 1
Outcome complete_decompositions() {
  const auto t0 = Clock::now();
  const long expected[] = {3, 15, 90, 543};
  std::ostringstream got;
  bool ok = true;
  for (std::uint64_t i = 0; i < 4; ++i) {
    const auto res = run_command("count", frob_job(2, 2 * (i + 1)));
    ok = ok && res.exit_code == 0 && res.output["chains"] == expected[i];
    got << (i ? "," : "") << res.output.value("chains", Json()).dump();
  }
  const double s = seconds_since(t0);
  ok = ok && s < 1.0;
  return {ok, "chains " + got.str() + " in " + std::to_string(s) + " s"};
}

// ---------------------------------------------------------------- 2
Outcome table_sweep() {
  const auto t0 = Clock::now();
  int rows = 0;
  bool ok = true;
  for (long r : {2L, 3L}) {
    const struct {
      Species s;
      long lines, chains;
    } table[] = {
        {species({{1, {3}}}), r * r + r + 1, (r * r + r + 1) * (r + 1)},
        {species({{1, {0, 1}}, {1, {1}}}), 2, 3},
        {species({{1, {0, 0, 1}}}), 1, 1},
        {species({{1, {1, 1}}}), r + 1, 2 * r + 1},
        {species({{1, {2}}, {1, {1}}}), r + 2, 3 * (r + 1)},
        {species({{3, {1}}}), 0, 1},
        {species({{1, {1}}, {2, {1}}}), 1, 2},
        {species({{1, {1}}, {1, {1}}, {1, {1}}}), 3, 6},
    };
    for (const auto& row : table) {
      const auto g = generating_function(row.s, r);
      ok = ok && g.size() == 4 && g[1] == row.lines && g[2] == row.lines && count_chains(row.s, r) == row.chains;
      ++rows;
    }
  }
  const double s = seconds_since(t0);
  ok = ok && s < 1.0;
  return {ok, std::to_string(rows) + " rows for r in {2,3} in " + std::to_string(s) + " s"};
}

// ---------------------------------------------------------------- 3, 4, 6
struct CorpusStats {
  std::size_t polys = 0, reachable = 0, component_checks = 0, minpoly_checks = 0, ore_checks = 0;
  std::size_t bijection_failures = 0, minpoly_failures = 0, ore_failures = 0;
  double seconds = 0;
};

const CorpusStats& corpus() {
  static std::optional<CorpusStats> cached;
  if (cached) return *cached;
  CorpusStats st;
  const auto t0 = Clock::now();
  // (q, r) = (2, 2), (4, 2), (4, 4)
  for (auto [e, k] : {std::pair{1, 1}, {1, 2}, {2, 1}}) {
    auto T = FieldTower::create(2, e, k);
    OracleBudget budget;
    budget.max_ext = 16 / static_cast<std::uint64_t>(e * k);
    for (std::size_t n = 1; n <= 3; ++n) {
      // |F_q|^n <= 64 here, so every instance is enumerated
      for (const auto& f : all_monic_squarefree(T, n)) {
        ++st.polys;
        ++st.ore_checks;
        if (ore_criterion_count(f) != count_right_components(f, 1)) ++st.ore_failures;
        std::optional<RootSpace> rs;
        try {
          rs = root_space(f, budget);
        } catch (const ExtensionTooLarge&) {
          continue;
        }
        ++st.reachable;
        ++st.minpoly_checks;
        const UPoly mp = minimal_polynomial(rs->frobenius);
        const auto J = rational_jordan_form(f);
        UPoly prod = UPoly::constant(T.r(), T.r().one());
        for (const auto& d : J.eigen)
          for (std::size_t i = 0; i < d.orders().front(); ++i) prod = prod * d.u;
        if (!(tau(mclc(f)) == mp && prod == mp)) ++st.minpoly_failures;
        for (std::size_t d = 0; d <= n; ++d) {
          ++st.component_checks;
          const BigInt fast = count_right_components(f, static_cast<long>(d));
          const auto brute = right_components_brute(f, d, *rs, budget).size();
          if (fast != brute || brute != count_components_by_division(f, d)) ++st.bijection_failures;
        }
      }
    }
  }
  // Ore also over odd characteristic, where t = r - 1 > 1
  for (auto [p, e, k] : {std::tuple{3, 1, 1}, {3, 1, 2}, {5, 1, 1}, {2, 2, 2}}) {
    auto T = FieldTower::create(p, e, k);
    for (std::size_t n = 1; n <= 2; ++n) {
      for (const auto& f : all_monic_squarefree(T, n)) {
        ++st.ore_checks;
        if (ore_criterion_count(f) != count_right_components(f, 1)) ++st.ore_failures;
      }
    }
  }
  st.seconds = seconds_since(t0);
  cached = st;
  return *cached;
}

Outcome bijection_audit() {
  const auto& st = corpus();
  const bool ok = st.bijection_failures == 0 && st.reachable > 0 && st.seconds < 60;
  return {ok, std::to_string(st.component_checks) + " (f, d) pairs over " + std::to_string(st.reachable) + " of " +
                  std::to_string(st.polys) + " polynomials with reachable root space, " +
                  std::to_string(st.bijection_failures) + " mismatches, corpus time " + std::to_string(st.seconds) +
                  " s"};
}

Outcome minpoly_identity() {
  const auto& st = corpus();
  return {st.minpoly_failures == 0 && st.minpoly_checks > 0,
          std::to_string(st.minpoly_checks) + " root spaces, " + std::to_string(st.minpoly_failures) + " mismatches"};
}

Outcome ore_criterion() {
  const auto& st = corpus();
  return {st.ore_failures == 0 && st.ore_checks > 0,
          std::to_string(st.ore_checks) + " polynomials, " + std::to_string(st.ore_failures) + " mismatches"};
}

// ---------------------------------------------------------------- 5
// "r^2+2r+3" -> coefficients {3, 2, 1}
std::vector<std::uint64_t> parse_r_poly(const std::string& s) {
  std::vector<std::uint64_t> c;
  std::stringstream ss(s);
  std::string term;
  while (std::getline(ss, term, '+')) {
    std::size_t deg = 0;
    std::uint64_t coef = 1;
    const auto pos = term.find('r');
    if (pos == std::string::npos) {
      coef = std::stoull(term);
    } else {
      if (pos > 0) coef = std::stoull(term.substr(0, pos));
      deg = term.size() > pos + 1 ? std::stoull(term.substr(pos + 2)) : 1;
    }
    if (c.size() <= deg) c.resize(deg + 1, 0);
    c[deg] += coef;
  }
  while (!c.empty() && c.back() == 0) c.pop_back();
  return c;
}

Outcome mhat_lists() {
  // the sets as printed, n = 0..6
  const std::vector<std::vector<std::string>> printed = {
      {"0"},
      {"0", "1"},
      {"0", "1", "2", "r+1"},
      {"0", "1", "2", "3", "r+1", "r+2", "r^2+r+1"},
      {"0", "1", "2", "3", "4", "r+1", "r+2", "r+3", "2r+2", "r^2+r+1", "r^2+r+2", "r^3+r^2+r+1"},
      {"0", "1", "2", "3", "4", "5", "r+1", "r+2", "r+3", "r+4", "2r+2", "2r+3", "r^2+r+1", "r^2+r+2", "r^2+r+3",
       "r^2+2r+2", "r^3+r^2+r+1", "r^3+r^2+r+2", "r^4+r^3+r^2+r+1"},
      {"0",           "1",           "2",           "3",           "4",           "5",           "6",
       "r+1",         "r+2",         "r+3",         "r+4",         "r+5",         "2r+2",        "2r+3",
       "2r+4",        "3r+3",        "r^2+r+1",     "r^2+r+2",     "r^2+r+3",     "r^2+r+4",     "r^2+2r+2",
       "r^2+2r+3",    "2r^2+2r+2",   "r^3+r^2+r+1", "r^3+r^2+r+2", "r^3+r^2+r+3", "r^3+r^2+2r+2", "r^4+r^3+r^2+r+1",
       "r^4+r^3+r^2+r+2", "r^5+r^4+r^3+r^2+r+1"},
  };
  const std::size_t sizes[] = {1, 2, 4, 7, 12, 19, 30};
  bool ok = true;
  for (std::size_t n = 0; n <= 6; ++n) {
    std::set<std::vector<std::uint64_t>> sym;
    for (const auto& s : printed[n]) sym.insert(parse_r_poly(s));
    ok = ok && sym.size() == sizes[n] && mhat_symbolic(n) == sym;
    for (long r : {2L, 3L, 4L}) {
      std::set<BigInt> expect;
      for (const auto& c : sym) {
        BigInt v = 0, rp = 1;
        for (auto x : c) v += rp * x, rp *= r;
        expect.insert(v);
      }
      ok = ok && mhat(n, r) == expect;
    }
  }
  return {ok, "n = 0..6 at r in {2,3,4}, sizes 1,2,4,7,12,19,30"};
}

// ---------------------------------------------------------------- 7
Outcome scaling() {
  double times[2];
  bool ok = true;
  const std::uint64_t ns[] = {64, 256};
  for (int i = 0; i < 2; ++i) {
    const auto t0 = Clock::now();
    const auto res = run_command("species", frob_job(1, ns[i]));
    times[i] = seconds_since(t0);
    // sigma_2 on F_(2^n) is a single unipotent block of order n
    std::vector<std::size_t> lam(ns[i], 0);
    lam.back() = 1;
    ok = ok && res.exit_code == 0 && res.output["species"] == Json::array({Json::array({1, lam})});
  }
  ok = ok && times[0] < 5 && times[1] < 120;
  return {ok, "n = 64 in " + std::to_string(times[0]) + " s, n = 256 in " + std::to_string(times[1]) + " s"};
}

// ---------------------------------------------------------------- 8
Outcome properties() {
  std::size_t failures = 0, checks = 0;
  // generating functions: palindrome and endpoints
  for (int r : {2, 3}) {
    const Field F = FieldTower::create(r, 1, 1).r();
    for (const auto& s : all_species(F, 5)) {
      const auto g = generating_function(s, r);
      const std::size_t n = g.size() - 1;
      ++checks;
      bool good = g.front() == 1 && g.back() == 1;
      for (std::size_t d = 0; d <= n; ++d) good = good && g[d] == g[n - d];
      if (!good) ++failures;
    }
  }
  std::mt19937_64 rng(2024);
  // tau is a ring isomorphism on the centre
  auto T = FieldTower::create(2, 1, 3);
  for (int i = 0; i < 200; ++i) {
    const auto a = random_central(T, 1 + i % 4, rng);
    const auto b = random_central(T, 1 + (i / 4) % 4, rng);
    ++checks;
    if (!(tau(compose(a, b)) == tau(a) * tau(b) && tau(a + b) == tau(a) + tau(b) && tau_inv(T, tau(a)) == a))
      ++failures;
  }
  // right division round trip
  auto T2 = FieldTower::create(3, 1, 2);
  for (int i = 0; i < 500; ++i) {
    const auto f = random_apoly(T2, 2 + i % 6, rng);
    const auto h = random_apoly(T2, 1 + i % 4, rng, true);
    const auto [g, rem] = right_divmod(f, h);
    ++checks;
    if (!(compose(g, h) + rem == f && rem.exponent() < h.exponent())) ++failures;
  }
  // factorization re-expansion
  const Field Fr = FieldTower::create(5, 1, 1).r();
  for (int i = 0; i < 500; ++i) {
    std::vector<Element> c;
    for (int j = 0; j <= 1 + i % 12; ++j) c.push_back(Fr.random(rng));
    c.back() = Fr.one();
    const UPoly u(Fr, c);
    UPoly prod = UPoly::constant(Fr, Fr.one());
    bool good = true;
    for (const auto& [v, k] : factor(u, static_cast<std::uint64_t>(i))) {
      good = good && is_irreducible(v) && v.is_monic();
      for (std::size_t j = 0; j < k; ++j) prod = prod * v;
    }
    ++checks;
    if (!good || !(prod == u)) ++failures;
  }
  return {failures == 0, std::to_string(checks) + " checks, " + std::to_string(failures) + " failures"};
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"complete decompositions 3, 15, 90, 543", complete_decompositions},
      {"three-dimensional table sweep", table_sweep},
      {"component / subspace bijection audit", bijection_audit},
      {"minimal polynomial identity", minpoly_identity},
      {"candidate line-count sets", mhat_lists},
      {"Ore criterion cross-count", ore_criterion},
      {"scaling in the exponent", scaling},
      {"property suites", properties},
  };
  int failed = 0;
  int idx = 0;
  for (const auto& [name, run] : criteria) {
    ++idx;
    Outcome o{false, ""};
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << idx << ": " << name << " (" << o.detail << ")"
              << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
