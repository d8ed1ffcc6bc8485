// Command-line front end: expansion, coefficient queries, triangle
// printing and the verification suites, in text or JSON.

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "qqcalc/qqcalc.hpp"

namespace {

using namespace qqcalc;

constexpr int kExitVerifyFailure = 1;
constexpr int kExitUsage = 2;

RelationConst relation_preset(const std::string& name) {
  if (name == "Q") return RelationConst::Q();
  if (name == "inv-q") return RelationConst::inv_q();
  if (name == "one") return RelationConst::one();
  throw CLI::ValidationError("--relation", "unknown preset '" + name + "'");
}

SubstTarget parse_subst(const std::string& spec) {
  if (spec == "golden") return SubstTarget::golden();
  if (spec == "Q=1") return SubstTarget::Q_to_one();
  if (spec == "q=1") return SubstTarget::q_to_one();
  if (spec == "Q=q") return SubstTarget::Q_to_q();
  if (spec == "Q=1/q" || spec == "Q=q^-1") return SubstTarget::Q_to_inv_q();
  // numeric form: comma-separated q=<rational>,Q=<rational>
  auto comma = spec.find(',');
  if (comma != std::string::npos) {
    bool have_q = false, have_Q = false;
    Rational q0, Q0;
    for (const std::string& part :
         {spec.substr(0, comma), spec.substr(comma + 1)}) {
      auto eq = part.find('=');
      if (eq == std::string::npos) break;
      std::string name = part.substr(0, eq);
      std::string value = part.substr(eq + 1);
      try {
        if (name == "q") {
          q0 = Rational(value);
          have_q = true;
        } else if (name == "Q") {
          Q0 = Rational(value);
          have_Q = true;
        }
      } catch (const std::exception&) {
        break;
      }
    }
    if (have_q && have_Q) return SubstTarget::numeric(q0, Q0);
  }
  throw CLI::ValidationError(
      "--subst", "expected golden, Q=1, q=1, Q=q, Q=1/q or q=<r>,Q=<r>");
}

std::string align_triangle(const std::vector<std::vector<LaurentPoly>>& rows) {
  std::vector<std::vector<std::string>> cells;
  std::size_t columns = 0;
  for (const auto& row : rows) {
    std::vector<std::string> line;
    for (const auto& e : row) line.push_back(e.to_string());
    columns = std::max(columns, line.size());
    cells.push_back(std::move(line));
  }
  std::vector<std::size_t> width(columns, 0);
  for (const auto& line : cells)
    for (std::size_t j = 0; j < line.size(); ++j)
      width[j] = std::max(width[j], line[j].size());
  std::string out;
  for (const auto& line : cells) {
    std::string text;
    for (std::size_t j = 0; j < line.size(); ++j) {
      if (j) text += "  ";
      text += line[j];
      if (j + 1 < line.size())
        text += std::string(width[j] - line[j].size(), ' ');
    }
    out += text + "\n";
  }
  return out;
}

struct VerifyRun {
  std::vector<Report> reports;

  bool all_passed() const {
    for (const auto& r : reports)
      if (!r.all_passed()) return false;
    return true;
  }

  void print(const std::string& format) const {
    if (format == "json") {
      json out = json::array();
      for (const auto& r : reports) out.push_back(to_json(r));
      std::cout << json{{"reports", out}, {"passed", all_passed()}}.dump(2)
                << "\n";
    } else {
      for (const auto& r : reports) std::cout << r.to_text();
      std::cout << (all_passed() ? "ALL PASS" : "FAILURES PRESENT") << "\n";
    }
  }
};

VerifyRun run_suites(const std::string& suite, int n_max,
                     const VerifyOptions& opts) {
  VerifyRun run;
  auto want = [&](const char* name) {
    return suite == "all" || suite == name;
  };
  if (want("theorem")) run.reports.push_back(verify_main_theorem(n_max, opts));
  if (want("order-relation"))
    run.reports.push_back(verify_order_relation(n_max, opts));
  if (want("symmetric"))
    run.reports.push_back(verify_symmetric_q1(std::max(1, n_max), opts));
  if (want("reversal"))
    run.reports.push_back(verify_order_reversal(std::max(1, n_max), opts));
  if (want("descending"))
    run.reports.push_back(verify_descending_expansion(std::max(1, n_max), opts));
  if (want("special-cases"))
    run.reports.push_back(verify_special_cases(std::max(1, n_max), opts));
  if (want("operators")) {
    Report ops = verify_operator_binomial(std::max(1, n_max), n_max + 1, opts);
    CheckResult comm;
    comm.name = "qcommutation degree<=" + std::to_string(n_max);
    comm.passed = verify_qcommutation(n_max);
    ops.cases.insert(ops.cases.begin(), std::move(comm));
    run.reports.push_back(std::move(ops));
  }
  if (want("exp")) {
    run.reports.push_back(verify_factorization(n_max, opts));
    run.reports.push_back(verify_exp_degeneration(n_max, opts));
  }
  return run;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact two-base (Q,q)-calculus and noncommutative binomial "
               "identity checker"};
  app.require_subcommand(1);
  std::string format = "text";

  // ---- expand ----
  auto* expand = app.add_subcommand(
      "expand", "expand an ordered product of binomial factors");
  int expand_n = 0;
  std::string expand_dir = "lt";
  std::string expand_rel = "Q";
  expand->add_option("--n", expand_n, "number of factors")
      ->required()
      ->check(CLI::NonNegativeNumber);
  expand->add_option("--dir", expand_dir, "multiplication order")
      ->check(CLI::IsMember({"lt", "gt"}));
  expand->add_option("--relation", expand_rel, "commutation constant")
      ->check(CLI::IsMember({"Q", "inv-q", "one"}));
  expand->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  // ---- coeff ----
  auto* coeff = app.add_subcommand(
      "coeff", "two-base binomial coefficient, optionally specialized");
  int coeff_n = 0, coeff_k = 0;
  std::string subst_spec;
  coeff->add_option("n,--n", coeff_n, "upper index")
      ->required()
      ->check(CLI::NonNegativeNumber);
  coeff->add_option("k,--k", coeff_k, "lower index")->required();
  coeff->add_option("--subst", subst_spec,
                    "golden | Q=1 | q=1 | Q=q | Q=1/q | q=<r>,Q=<r>");
  coeff->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  // ---- triangle ----
  auto* triangle =
      app.add_subcommand("triangle", "rows of the two-base Pascal triangle");
  int triangle_n_max = 0;
  triangle->add_option("--n-max", triangle_n_max, "last row")
      ->required()
      ->check(CLI::NonNegativeNumber);
  triangle->add_option("--format", format)
      ->check(CLI::IsMember({"text", "json"}));

  // ---- verify ----
  auto* verify =
      app.add_subcommand("verify", "run symbolic identity verification");
  std::string suite = "all";
  int verify_n_max = 8;
  bool parallel = false;
  bool inject_fault = false;
  verify->add_option("suite", suite, "which identity family to check")
      ->check(CLI::IsMember({"theorem", "order-relation", "symmetric",
                             "reversal", "descending", "special-cases",
                             "operators", "exp", "all"}));
  verify->add_option("--n-max", verify_n_max, "largest expansion order")
      ->check(CLI::NonNegativeNumber);
  verify->add_flag("--parallel", parallel, "check independent orders concurrently");
  verify->add_flag("--inject-fault", inject_fault)->group("");  // test hook
  verify->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  // ---- exp-check ----
  auto* expcheck = app.add_subcommand(
      "exp-check", "print truncated exponential series and verify factorization");
  int exp_n_max = 8;
  expcheck->add_option("--n-max", exp_n_max, "truncation order")
      ->check(CLI::NonNegativeNumber);
  expcheck->add_option("--format", format)
      ->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (expand->parsed()) {
      RelationConst rel = relation_preset(expand_rel);
      NCPoly p = expand_dir == "lt" ? binomial_lt(expand_n, rel)
                                    : binomial_gt(expand_n, rel);
      if (format == "json")
        std::cout << to_json(p).dump(2) << "\n";
      else
        std::cout << to_string(p) << "\n";
      return 0;
    }

    if (coeff->parsed()) {
      LaurentPoly c = qq_binomial(coeff_n, coeff_k);
      if (subst_spec.empty()) {
        if (format == "json")
          std::cout << to_json(c).dump(2) << "\n";
        else
          std::cout << c.to_string() << "\n";
        return 0;
      }
      SubstResult r = lp_substitute(c, parse_subst(subst_spec));
      if (format == "json") {
        json out;
        if (const auto* p = std::get_if<LaurentPoly>(&r))
          out = to_json(*p);
        else if (const auto* x = std::get_if<Rational>(&r))
          out = {{"value", x->str()}};
        else
          out = to_json(std::get<GoldenNum>(r));
        std::cout << out.dump(2) << "\n";
      } else {
        std::cout << to_string(r) << "\n";
      }
      return 0;
    }

    if (triangle->parsed()) {
      auto rows = triangle_rows(triangle_n_max);
      if (format == "json")
        std::cout << triangle_to_json(rows).dump(2) << "\n";
      else
        std::cout << align_triangle(rows);
      return 0;
    }

    if (verify->parsed()) {
      VerifyOptions opts;
      opts.parallel = parallel;
      if (inject_fault) opts.fault_n = std::max(1, verify_n_max);
      VerifyRun run = run_suites(suite, verify_n_max, opts);
      run.print(format);
      return run.all_passed() ? 0 : kExitVerifyFailure;
    }

    if (expcheck->parsed()) {
      TruncSeries e_x = exp_small(exp_n_max, Generator::x);
      TruncSeries E_y = exp_big(exp_n_max, Generator::y);
      TruncSeries e_sum = exp_of_binomial(exp_n_max);
      Report fact = verify_factorization(exp_n_max);
      Report degen = verify_exp_degeneration(exp_n_max);
      bool ok = fact.all_passed() && degen.all_passed();
      if (format == "json") {
        std::cout << json{{"e_x", to_json(e_x)},
                          {"E_y", to_json(E_y)},
                          {"e_binomial", to_json(e_sum)},
                          {"factorization", to_json(fact)},
                          {"degeneration", to_json(degen)},
                          {"passed", ok}}
                         .dump(2)
                  << "\n";
      } else {
        std::cout << "e(x)       = " << e_x.to_string() << "\n";
        std::cout << "E(y)       = " << E_y.to_string() << "\n";
        std::cout << "e((x+y)<q) = " << e_sum.to_string() << "\n";
        std::cout << fact.to_text() << degen.to_text();
      }
      return ok ? 0 : kExitVerifyFailure;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerifyFailure;
  }
  return kExitUsage;
}
