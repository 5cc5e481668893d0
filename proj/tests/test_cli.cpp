#include "doctest.h"

#include <array>
#include <cstdio>
#include <fstream>
#include <sys/wait.h>

#include "addpoly/commands.hpp"
#include "addpoly/error.hpp"
#include "helpers.hpp"

using namespace addpoly;
using namespace testing;

namespace {

Json job_frob(std::uint64_t k, std::uint64_t n) {
  return Json{{"p", 2}, {"k", k}, {"f", Json{{"terms", Json::array({Json::array({0, 1}), Json::array({n, 1})})}}}};
}

struct Run {
  std::string out;
  int code;
};

// Runs the installed tool on a job file and captures stdout.
Run run_tool(const std::string& args, const Json& job) {
  const std::string path = "cli_job_" + std::to_string(std::hash<std::string>{}(args + job.dump())) + ".json";
  std::ofstream(path) << job.dump();
  const std::string cmd = std::string(ADDPOLY_CLI) + " " + args + " --input " + path;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t got = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), got);
  const int status = pclose(pipe);
  std::remove(path.c_str());
  return {out, WIFEXITED(status) ? WEXITSTATUS(status) : -1};
}

}  // namespace

TEST_CASE("element encoding") {
  auto T = FieldTower::create(2, 1, 2);
  const Field F = T.q();
  // g + 1 over F_2
  CHECK(encode_element(F, F.element(3)) == Json::parse("[1,1]"));
  CHECK(encode_element(T.r(), T.r().one()) == Json(1));
  CHECK(decode_element(F, Json(1), "x") == F.one());
  CHECK(decode_element(F, Json::parse("[0,1]"), "x") == F.element(2));

  for (auto [p, e, k] : {std::tuple{2, 2, 2}, {3, 1, 2}, {2, 3, 1}, {5, 1, 1}, {3, 2, 1}}) {
    auto U = FieldTower::create(p, e, k);
    for (const Field& G : {U.prime(), U.r(), U.q()}) {
      for (std::uint64_t i = 0; i < *G.cardinality(); ++i) {
        const Element x = G.element(i);
        CHECK(decode_element(G, encode_element(G, x), "x") == x);
      }
    }
  }
  auto U = FieldTower::create(2, 2, 2);
  CHECK(encode_element(U.q(), U.q().element(0b1101)) == Json::parse("[[1,0],[1,1]]"));
}

TEST_CASE("element decoding errors name the location") {
  auto T = FieldTower::create(3, 1, 2);
  const Field F = T.q();
  CHECK_THROWS_WITH_AS(decode_element(F, Json::parse("[1,2,0]"), "f.coeffs[4]"),
                       "f.coeffs[4]: expected 2 entries, got 3", InputError);
  CHECK_THROWS_WITH_AS(decode_element(F, Json(3), "a"), "a: integer 3 is not below p = 3", InputError);
  CHECK_THROWS_WITH_AS(decode_element(F, Json::parse("[1,\"x\"]"), "a"), "a[1]: expected an integer", InputError);
  CHECK_THROWS_AS(decode_element(F, Json(-1), "a"), InputError);
}

TEST_CASE("polynomial forms") {
  auto T = FieldTower::create(2, 1, 2);
  const auto f = apoly(T, {1, 2, 0, 3});
  CHECK(decode_additive(T, encode_additive(f)) == f);
  CHECK(encode_additive(f)["r_exp"] == 1);
  const Json terms = Json::parse(R"({"terms": [[0, 1], [1, [0, 1]], [3, [1, 1]]]})");
  CHECK(decode_additive(T, terms) == f);
  CHECK(decode_additive(T, Json::parse("[1, [0,1], 0, [1,1]]")) == f);
  CHECK_THROWS_AS(decode_additive(T, Json::parse(R"({"terms": [[0, 1], [0, 1]]})")), InputError);
  CHECK_THROWS_AS(decode_additive(T, Json::parse(R"({"r_exp": 2, "coeffs": [1]})")), InputError);
  CHECK_THROWS_AS(decode_additive(T, Json::parse(R"({"coeffs": [1], "terms": []})")), InputError);

  const auto s = species({{1, {0, 2}}, {3, {1}}});
  CHECK(encode_species(s) == Json::parse("[[1,[0,2]],[3,[1]]]"));
  CHECK(decode_species(encode_species(s)) == s);
  CHECK(encode_big(BigInt(1) << 70) == Json("1180591620717411303424"));
  CHECK(encode_big(42) == Json(42));
}

TEST_CASE("job parsing") {
  CHECK_THROWS_WITH_AS(parse_job(Json::parse(R"({"p": 4})")), "p: expected a prime below 2^16", InputError);
  CHECK_THROWS_AS(parse_job(Json::parse(R"({"p": 2, "colour": 1})")), InputError);
  CHECK_THROWS_AS(parse_job(Json::parse(R"({"k": 2})")), InputError);
  CHECK_THROWS_AS(parse_job(Json::parse("[]")), InputError);
  const auto job = parse_job(Json::parse(R"({"p": 2, "e": 1, "k": 3, "m_q": [1, 1, 0, 1], "seed": 9, "d": 2})"));
  REQUIRE(job.tower);
  CHECK(job.tower->modulus(Level::q).size() == 4);
  CHECK(job.seed == 9);
  CHECK(*job.d == 2);
  // m_q must be irreducible over F_r
  CHECK_THROWS_AS(parse_job(Json::parse(R"({"p": 2, "k": 2, "m_q": [1, 0, 1]})")), InputError);
}

TEST_CASE("species command") {
  auto res = run_command("species", job_frob(2, 4));
  CHECK(res.exit_code == 0);
  CHECK(res.output["species"] == Json::parse("[[1,[0,2]]]"));
  CHECK(res.output["nullities"]["y+1"] == Json::parse("[0,2,4,4]"));
  res = run_command("species", job_frob(2, 2));
  CHECK(res.output["species"] == Json::parse("[[1,[2]]]"));

  res = run_command("species", Json::parse(R"({"p": 2, "k": 2, "f": {"coeffs": [[1, 1, 1], 0, 1]}})"));
  CHECK(res.exit_code == kExitInput);
  CHECK(res.output["error"]["kind"] == "input_error");
  CHECK(res.output["error"]["message"].get<std::string>().find("f.coeffs[0]") != std::string::npos);

  res = run_command("species", Json::parse(R"({"p": 2, "k": 2, "f": {"coeffs": [0, 0, 1]}})"));
  CHECK(res.exit_code == kExitInput);
}

TEST_CASE("count commands") {
  const long expected[] = {3, 15, 90, 543};
  for (std::uint64_t i = 0; i < 4; ++i) {
    auto res = run_command("count", job_frob(2, 2 * (i + 1)));
    REQUIRE(res.exit_code == 0);
    CHECK(res.output["chains"] == expected[i]);
  }
  auto j = job_frob(2, 4);
  j["d"] = 0;
  CHECK(run_command("count", j).output["g_d"] == 1);
  j["d"] = 1;
  CHECK(run_command("count", j).output["g_d"] == 3);
  CHECK_FALSE(run_command("count", j).output.contains("g"));
  j["all"] = true;
  CHECK(run_command("count", j).output["g"] == Json::parse("[1,3,7,3,1]"));

  // over budget the full list degrades, a single middle coefficient fails
  auto big = job_frob(2, 8);
  CHECK(run_command("count", big).output["g"] == "budget_exceeded");
  big["d"] = 4;
  auto res = run_command("count", big);
  CHECK(res.exit_code == kExitBudget);
  CHECK(res.output["error"]["kind"] == "budget_exceeded");
  big["dim_budget"] = 8;
  CHECK(run_command("count", big).exit_code == 0);

  res = run_command("count-general", Json::parse(R"({"p": 2, "f": {"coeffs": [0, 1, 1]}, "d": 1})"));
  CHECK(res.output["count"] == 2);
  CHECK(res.output["m"] == 1);
  CHECK(run_command("count-general", Json::parse(R"({"p": 2, "f": {"coeffs": [0, 1, 1]}})")).exit_code == kExitInput);
}

TEST_CASE("mhat and pi commands") {
  auto res = run_command("mhat", Json::parse(R"({"n": 2, "r": 2})"));
  CHECK(res.output["mhat"] == Json::parse("[0,1,2,3]"));
  CHECK(res.output["size"] == 4);
  res = run_command("mhat", Json::parse(R"({"n": 6, "r": 4})"));
  CHECK(res.output["symbolic"].size() == 30);
  CHECK(run_command("mhat", Json::parse(R"({"n": 2})")).exit_code == kExitInput);
  res = run_command("mhat", Json::parse(R"({"n": 1, "p": 3, "e": 2})"));
  CHECK(res.output["r"] == 9);

  // r = 4, t = 3: pi_3(x^16 + x) = x^5 + 1
  res = run_command("pi", Json::parse(R"({"p": 2, "e": 2, "f": {"terms": [[0, 1], [2, 1]]}})"));
  REQUIRE(res.exit_code == 0);
  CHECK(res.output["t"] == 3);
  CHECK(res.output["pi"]["degree"] == 5);
  CHECK(res.output["rho"]["degree"] == 16);
  res = run_command("pi", Json::parse(R"({"p": 2, "e": 2, "t": 2, "f": {"terms": [[0, 1], [2, 1]]}})"));
  CHECK(res.exit_code == kExitInput);
}

TEST_CASE("verify command") {
  auto res = run_command("verify", job_frob(2, 2));
  CHECK(res.exit_code == 0);
  CHECK(res.output["passed"] == true);
  res = run_command("verify", job_frob(2, 4));
  CHECK(res.output["passed"] == true);
  CHECK(res.output["ext_degree"] == 2);
  // primitive sextic needs degree 63
  res = run_command("verify", Json::parse(R"({"p": 2, "f": {"terms": [[0, 1], [1, 1], [6, 1]]}})"));
  CHECK(res.exit_code == kExitBudget);
  CHECK(res.output["error"]["kind"] == "extension_too_large");
  CHECK(run_command("frobnicate", job_frob(2, 2)).exit_code == kExitInput);
}

TEST_CASE("tool output is deterministic and exit codes match") {
  for (const char* cmd : {"species", "count --all", "verify --pretty"}) {
    const auto a = run_tool(cmd, job_frob(2, 4));
    const auto b = run_tool(cmd, job_frob(2, 4));
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK_NOTHROW((void)Json::parse(a.out));
  }
  auto seeded = job_frob(2, 6);
  CHECK(run_tool("species --seed 5", seeded).out == run_tool("species --seed 5", seeded).out);

  auto bad = run_tool("species", Json::parse(R"({"p": 2, "f": [1, 2]})"));
  CHECK(bad.code == 2);
  CHECK(Json::parse(bad.out)["error"]["kind"] == "input_error");
  auto over = run_tool("count -d 4", job_frob(2, 8));
  CHECK(over.code == 3);
  auto ok = run_tool("count -d 4 --dim-budget 8", job_frob(2, 8));
  CHECK(ok.code == 0);
  CHECK(Json::parse(ok.out)["chains"] == 543);
  auto ext = run_tool("verify --max-ext 1", job_frob(2, 4));
  CHECK(ext.code == 3);
}
