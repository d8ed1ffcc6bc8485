#pragma once

#include <algorithm>
#include <future>
#include <string>
#include <vector>

#include "qqcalc/ncpoly.hpp"

namespace qqcalc {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;  // first mismatching term, empty on pass
};

struct Report {
  std::string suite;
  std::vector<CheckResult> cases;

  bool all_passed() const {
    for (const auto& c : cases)
      if (!c.passed) return false;
    return true;
  }

  std::string to_text() const {
    std::string out = "suite " + suite + "\n";
    for (const auto& c : cases) {
      out += (c.passed ? "  pass  " : "  FAIL  ") + c.name;
      if (!c.detail.empty()) out += "\n        " + c.detail;
      out += "\n";
    }
    out += all_passed() ? "result: PASS\n" : "result: FAIL\n";
    return out;
  }
};

// Term-level diff: reports the first key at which the two sides differ.
template <class Coeff>
std::string first_mismatch(const NCPolyT<Coeff>& lhs,
                           const NCPolyT<Coeff>& rhs) {
  auto degrees = [](const NCPolyT<Coeff>& p) {
    std::vector<XYDegree> d;
    for (const auto& [e, c] : p.terms()) d.push_back(e);
    return d;
  };
  std::vector<XYDegree> keys = degrees(lhs);
  for (const auto& e : degrees(rhs)) keys.push_back(e);
  std::sort(keys.begin(), keys.end(), [](const XYDegree& a, const XYDegree& b) {
    return XYDegreeOrder{}(a, b);
  });
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  for (const auto& e : keys) {
    Coeff l = lhs.coeff(e.x, e.y);
    Coeff r = rhs.coeff(e.x, e.y);
    if (!(l == r))
      return "x^" + std::to_string(e.x) + "*y^" + std::to_string(e.y) +
             ": " + coeff_string(l) + " != " + coeff_string(r);
  }
  return "";
}

template <class Coeff>
CheckResult compare_expansions(std::string name, const NCPolyT<Coeff>& lhs,
                               const NCPolyT<Coeff>& rhs) {
  CheckResult r;
  r.name = std::move(name);
  r.passed = lhs == rhs;
  if (!r.passed) r.detail = first_mismatch(lhs, rhs);
  return r;
}

struct VerifyOptions {
  bool parallel = false;
  // Test hook: when >= 0, the closed-form side of the main-theorem check
  // is perturbed at this n so the negative path can be exercised.
  int fault_n = -1;
};

// Runs fn(n) for n = lo..hi, optionally concurrently; results are
// collected by index so the report is identical either way.
template <class F>
std::vector<CheckResult> run_indexed_cases(int lo, int hi, const F& fn,
                                           bool parallel) {
  std::vector<CheckResult> out(hi - lo + 1);
  if (parallel) {
    std::vector<std::future<CheckResult>> futs;
    futs.reserve(out.size());
    for (int n = lo; n <= hi; ++n)
      futs.push_back(std::async(std::launch::async, fn, n));
    for (int n = lo; n <= hi; ++n) out[n - lo] = futs[n - lo].get();
  } else {
    for (int n = lo; n <= hi; ++n) out[n - lo] = fn(n);
  }
  return out;
}

}  // namespace qqcalc
