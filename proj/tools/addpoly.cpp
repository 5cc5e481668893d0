#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "addpoly/commands.hpp"

using addpoly::Json;

namespace {

struct Flags {
  std::string input;
  std::optional<std::uint64_t> seed, dim_budget, max_ext, t, n;
  std::optional<long> d;
  std::optional<std::string> r;
  bool all = false;
  bool json = true;
  bool pretty = false;
};

void print(const Json& j, bool pretty) { std::cout << j.dump(pretty ? 2 : -1) << '\n'; }

std::string slurp(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rational Jordan form of the Frobenius on the roots of an additive polynomial, and the "
               "component and decomposition counts that follow from it."};
  app.require_subcommand(1);
  Flags fl;
  const std::pair<const char*, const char*> commands[] = {
      {"species", "rational Jordan form and species"},
      {"count", "invariant subspace and maximal chain counts (right components, complete decompositions)"},
      {"count-general", "right components of exponent d of a possibly inseparable polynomial"},
      {"mhat", "candidate values for the number of exponent-one right components"},
      {"pi", "projective and subadditive images"},
      {"verify", "cross-check the fast path against brute-force enumeration"},
  };
  for (const auto& [name, help] : commands) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("--input", fl.input, "JobSpec JSON file, or - for stdin");
    sub->add_option("--seed", fl.seed, "seed for randomized factoring");
    sub->add_option("--dim-budget", fl.dim_budget, "largest eigenfactor lattice dimension to enumerate");
    sub->add_option("--max-ext", fl.max_ext, "largest extension degree for the root space");
    sub->add_flag("--json", fl.json, "JSON output (the default)");
    sub->add_flag("--pretty", fl.pretty, "indent the JSON output");
    if (std::string(name) == "count" || std::string(name) == "count-general") sub->add_option("-d,--d", fl.d, "exponent of the right components");
    if (std::string(name) == "count") sub->add_flag("--all", fl.all, "also print the full generating function");
    if (std::string(name) == "pi") sub->add_option("-t,--t", fl.t, "divisor of r - 1 (default r - 1)");
    if (std::string(name) == "mhat") {
      sub->add_option("-n,--n", fl.n, "exponent");
      sub->add_option("-r,--r", fl.r, "size of the coefficient field of the centre");
    }
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    print(addpoly::error_json("input_error", e.what()), false);
    return addpoly::kExitInput;
  }
  const std::string name = app.get_subcommands().front()->get_name();

  Json job = Json::object();
  const bool needs_input = name != "mhat" || !fl.input.empty();
  if (needs_input) {
    try {
      job = Json::parse(slurp(fl.input.empty() ? "-" : fl.input));
    } catch (const std::exception& e) {
      print(addpoly::error_json("input_error", e.what()), fl.pretty);
      return addpoly::kExitInput;
    }
  }
  if (job.is_object()) {
    if (fl.seed) job["seed"] = *fl.seed;
    if (fl.dim_budget) job["dim_budget"] = *fl.dim_budget;
    if (fl.max_ext) job["max_ext"] = *fl.max_ext;
    if (fl.d) job["d"] = *fl.d;
    if (fl.all) job["all"] = true;
    if (fl.t) job["t"] = *fl.t;
    if (fl.n) job["n"] = *fl.n;
    if (fl.r) job["r"] = *fl.r;
  }
  const auto result = addpoly::run_command(name, job);
  print(result.output, fl.pretty);
  return result.exit_code;
}
