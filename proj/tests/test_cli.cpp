// End-to-end checks of the command-line tool. The binary path arrives
// in QQCALC_CLI (set by CTest).

#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

#include <json.hpp>

#include "qqcalc/json_io.hpp"

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

std::string cli_path() {
  const char* p = std::getenv("QQCALC_CLI");
  REQUIRE(p != nullptr);
  return p;
}

RunResult run(const std::string& args) {
  std::string cmd = cli_path() + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  std::array<char, 4096> buf;
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe))
    r.output.append(buf.data(), n);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST_CASE("expand renders fixed text") {
  RunResult r = run("expand --n 2 --dir lt");
  REQUIRE(r.exit_code == 0);
  REQUIRE(r.output == "x^2 + (Q+q)*x*y + q*y^2\n");

  REQUIRE(run("expand --n 0").output == "1\n");
  REQUIRE(run("expand --n 2 --dir gt").output ==
          "x^2 + (Q*q+1)*x*y + q*y^2\n");
}

TEST_CASE("coefficient queries with substitutions") {
  REQUIRE(run("coeff 4 2").output == "Q^4+Q^3*q+2*Q^2*q^2+Q*q^3+q^4\n");
  REQUIRE(run("coeff 4 2 --subst Q=1,q=1").output == "6\n");
  REQUIRE(run("coeff 5 2 --subst golden").output == "15\n");
  REQUIRE(run("coeff 3 5").output == "0\n");
  REQUIRE(run("coeff 4 2 --subst q=1/2,Q=3").output.find('/') !=
          std::string::npos);
}

TEST_CASE("triangle output") {
  REQUIRE(run("triangle --n-max 0").output == "1\n");
  RunResult json_run = run("triangle --n-max 2 --format json");
  REQUIRE(json_run.exit_code == 0);
  auto j = nlohmann::json::parse(json_run.output);
  REQUIRE(j.size() == 3);
  REQUIRE(j[2].size() == 3);
}

TEST_CASE("json output round-trips through the documented schemas") {
  auto expand = nlohmann::json::parse(run("expand --n 3 --format json").output);
  REQUIRE(qqcalc::ncpoly_from_json(expand) ==
          qqcalc::binomial_lt(3, qqcalc::RelationConst::Q()));

  auto coeff = nlohmann::json::parse(run("coeff 4 2 --format json").output);
  REQUIRE(qqcalc::laurent_from_json(coeff) == qqcalc::qq_binomial(4, 2));

  auto golden =
      nlohmann::json::parse(run("coeff 5 2 --subst golden --format json").output);
  REQUIRE(qqcalc::golden_from_json(golden) == qqcalc::GoldenNum(15, 0));
}

TEST_CASE("verify exits zero on success") {
  REQUIRE(run("verify theorem --n-max 1").exit_code == 0);
  REQUIRE(run("verify exp --n-max 3").exit_code == 0);
  RunResult all = run("verify all --n-max 3");
  REQUIRE(all.exit_code == 0);
  REQUIRE(all.output.find("ALL PASS") != std::string::npos);
}

TEST_CASE("verify json mode carries the pass flag") {
  RunResult r = run("verify theorem --n-max 2 --format json");
  REQUIRE(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.output);
  REQUIRE(j["passed"] == true);
  REQUIRE(j["reports"][0]["suite"] == "theorem");
}

TEST_CASE("perturbed verification fails with a diff") {
  RunResult r = run("verify theorem --n-max 4 --inject-fault");
  REQUIRE(r.exit_code == 1);
  REQUIRE(r.output.find("FAIL") != std::string::npos);
  REQUIRE(r.output.find("x^3*y^1") != std::string::npos);
}

TEST_CASE("usage errors exit with status 2") {
  REQUIRE(run("expand").exit_code == 2);           // missing --n
  REQUIRE(run("expand --n -1").exit_code == 2);    // negative order
  REQUIRE(run("bogus-subcommand").exit_code == 2);
  REQUIRE(run("expand --n 2 --bogus-flag").exit_code == 2);
  REQUIRE(run("coeff 4 2 --subst Q=0/0").exit_code == 2);
  REQUIRE(run("verify nonexistent-suite").exit_code == 2);
}

TEST_CASE("help is not an error") {
  REQUIRE(run("--help").exit_code == 0);
}
