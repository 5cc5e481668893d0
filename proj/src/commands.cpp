#include "addpoly/commands.hpp"

#include "addpoly/error.hpp"
#include "addpoly/frobjordan.hpp"
#include "addpoly/latcount.hpp"
#include "addpoly/oracle.hpp"

namespace addpoly {

namespace {

Json species_fields(const RationalJordanForm& J) {
  Json factors = Json::array();
  Json nullities = Json::object();
  for (const auto& e : J.eigen) {
    factors.push_back(Json{{"u", encode_upoly(e.u)},
                           {"text", to_string(e.u)},
                           {"multiplicity", e.multiplicity},
                           {"orders", e.orders()}});
    nullities[to_string(e.u)] = e.nullities;
  }
  const Species s = J.species();
  return Json{{"n", J.dimension()},
              {"minpoly", to_string(J.minpoly)},
              {"minpoly_factors", factors},
              {"species", encode_species(s)},
              {"species_text", to_string(s)},
              {"nullities", nullities}};
}

std::string r_polynomial(const std::vector<std::uint64_t>& c) {
  std::string out;
  for (std::size_t t = c.size(); t-- > 0;) {
    if (c[t] == 0) continue;
    if (!out.empty()) out += "+";
    if (t == 0) {
      out += std::to_string(c[t]);
      continue;
    }
    if (c[t] != 1) out += std::to_string(c[t]) + "*";
    out += t == 1 ? "r" : "r^" + std::to_string(t);
  }
  return out.empty() ? "0" : out;
}

Json check(const std::string& name, const Json& fast, const Json& oracle) {
  return Json{{"name", name}, {"fast", fast}, {"oracle", oracle}, {"pass", fast == oracle}};
}

}  // namespace

Json cmd_species(const JobSpec& job) {
  const auto J = rational_jordan_form(job.require_f(), job.seed);
  Json out{{"command", "species"}};
  out.update(species_fields(J));
  return out;
}

Json cmd_count(const JobSpec& job) {
  const AdditivePoly& f = job.require_f();
  const auto J = rational_jordan_form(f, job.seed);
  const Species s = J.species();
  const BigInt r = f.tower().r_value();
  const CountBudget budget = job.count_budget();
  Json out{{"command", "count"},
           {"n", J.dimension()},
           {"species", encode_species(s)},
           {"species_text", to_string(s)},
           {"lines", encode_big(count_lines(s, r))},
           {"chains", encode_big(count_chains(s, r))}};
  if (job.d) {
    out["d"] = *job.d;
    out["g_d"] = encode_big(count_subspaces(s, r, *job.d, budget));
  }
  if (job.all || !job.d) {
    try {
      Json g = Json::array();
      for (const auto& v : generating_function(s, r, budget)) g.push_back(encode_big(v));
      out["g"] = g;
    } catch (const BudgetExceeded& e) {
      out["g"] = "budget_exceeded";
      out["g_reason"] = e.what();
    }
  }
  return out;
}

Json cmd_count_general(const JobSpec& job) {
  const AdditivePoly& fbar = job.require_f();
  if (!job.d) throw InputError("count-general: \"d\" is required");
  if (!fbar.is_monic()) throw InputError("count-general needs a monic polynomial");
  const auto [m, f] = strip_inseparable(fbar);
  return Json{{"command", "count-general"},
              {"m", m},
              {"n", f.exponent()},
              {"d", *job.d},
              {"count", encode_big(count_right_components_general(fbar, *job.d, job.count_budget(), job.seed))}};
}

Json cmd_mhat(const JobSpec& job) {
  if (!job.n) throw InputError("mhat: \"n\" is required");
  if (*job.n > 40) throw BudgetExceeded("mhat: n above 40 has too many partitions");
  BigInt r;
  if (job.r) {
    r = *job.r;
  } else if (job.tower) {
    r = job.tower->r_value();
  } else {
    throw InputError("mhat: give \"r\" or a field tower");
  }
  Json values = Json::array();
  for (const auto& v : mhat(*job.n, r)) values.push_back(encode_big(v));
  Json symbolic = Json::array();
  for (const auto& c : mhat_symbolic(*job.n)) symbolic.push_back(r_polynomial(c));
  return Json{{"command", "mhat"},
              {"n", *job.n},
              {"r", encode_big(r)},
              {"mhat", values},
              {"size", values.size()},
              {"symbolic", symbolic}};
}

Json cmd_pi(const JobSpec& job) {
  const AdditivePoly& f = job.require_f();
  const BigInt r = f.tower().r_value();
  const std::uint64_t t = job.t.value_or(r <= std::numeric_limits<std::uint64_t>::max()
                                             ? static_cast<std::uint64_t>(r - 1)
                                             : 0);
  return Json{{"command", "pi"}, {"t", t}, {"pi", encode_sparse(pi_t(f, t))}, {"rho", encode_sparse(rho_t(f, t))}};
}

Json cmd_verify(const JobSpec& job) {
  const AdditivePoly& f = job.require_f();
  const OracleBudget ob = job.oracle_budget();
  const CountBudget cb = job.count_budget();
  const BigInt r = f.tower().r_value();
  const auto J = rational_jordan_form(f, job.seed);
  const Species s = J.species();
  const RootSpace rs = root_space(f, ob);
  const auto n = static_cast<long>(f.exponent());

  Json checks = Json::array();
  checks.push_back(check("minpoly", to_string(tau(mclc(f))), to_string(minimal_polynomial(rs.frobenius))));
  checks.push_back(check("species", to_string(s), to_string(species_from_matrix(rs.frobenius, job.seed))));
  for (long d = 0; d <= n; ++d) {
    const BigInt fast = count_right_components(f, d, cb, job.seed);
    const auto brute = right_components_brute(f, static_cast<std::size_t>(d), rs, ob).size();
    checks.push_back(check("components[" + std::to_string(d) + "]", encode_big(fast), encode_big(brute)));
  }
  checks.push_back(check("chains", encode_big(count_chains(s, r)), encode_big(maximal_chains_brute(rs.frobenius, ob))));
  try {
    checks.push_back(check("ore", encode_big(ore_criterion_count(f, kDefaultDenseCap, job.seed)),
                           encode_big(count_right_components(f, 1, cb, job.seed))));
  } catch (const BudgetExceeded& e) {
    checks.push_back(Json{{"name", "ore"}, {"skipped", e.what()}});
  }
  bool passed = true;
  for (const auto& c : checks)
    if (c.contains("pass") && !c["pass"].get<bool>()) passed = false;
  return Json{{"command", "verify"},
              {"n", n},
              {"ext_degree", rs.ext_degree},
              {"species_text", to_string(s)},
              {"checks", checks},
              {"passed", passed}};
}

Json error_json(const std::string& kind, const std::string& message) {
  return Json{{"error", Json{{"kind", kind}, {"message", message}}}};
}

CommandResult run_command(const std::string& name, const Json& raw) {
  try {
    const JobSpec job = parse_job(raw);
    if (name == "species") return {cmd_species(job), kExitOk};
    if (name == "count") return {cmd_count(job), kExitOk};
    if (name == "count-general") return {cmd_count_general(job), kExitOk};
    if (name == "mhat") return {cmd_mhat(job), kExitOk};
    if (name == "pi") return {cmd_pi(job), kExitOk};
    if (name == "verify") {
      Json report = cmd_verify(job);
      const bool ok = report["passed"].get<bool>();
      return {std::move(report), ok ? kExitOk : kExitInternal};
    }
    return {error_json("input_error", "unknown command \"" + name + "\""), kExitInput};
  } catch (const InputError& e) {
    return {error_json(e.kind(), e.what()), kExitInput};
  } catch (const BudgetExceeded& e) {
    return {error_json(e.kind(), e.what()), kExitBudget};
  } catch (const Error& e) {
    return {error_json(e.kind(), e.what()), kExitInternal};
  } catch (const Json::exception& e) {
    return {error_json("input_error", e.what()), kExitInput};
  } catch (const std::exception& e) {
    return {error_json("internal_inconsistency", e.what()), kExitInternal};
  }
}

}  // namespace addpoly
