#pragma once

// Concrete realization of the commutation relation on polynomials in z:
// the dilatation M z^n = Q^n z^n and the difference operator
// D z^n = (1 + Q + ... + Q^{n-1}) z^{n-1} satisfy D M = Q M D, so
// applying both sides of the abstract expansion to monomials gives an
// independent check that really exercises noncommuting operators.

#include <map>
#include <string>
#include <vector>

#include "qqcalc/laurent.hpp"
#include "qqcalc/ncpoly.hpp"
#include "qqcalc/report.hpp"

namespace qqcalc {

// Univariate polynomial in z with LaurentPoly coefficients; sparse and
// canonical like everything else.
class UniPoly {
 public:
  UniPoly() = default;

  static UniPoly monomial(int degree, LaurentPoly c = LaurentPoly::one()) {
    UniPoly p;
    p.add_term(degree, c);
    return p;
  }

  bool is_zero() const { return terms_.empty(); }
  const std::map<int, LaurentPoly>& terms() const { return terms_; }

  void add_term(int degree, const LaurentPoly& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(degree);
    if (it == terms_.end()) {
      terms_.emplace(degree, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  UniPoly& operator+=(const UniPoly& o) {
    for (const auto& [d, c] : o.terms_) add_term(d, c);
    return *this;
  }

  UniPoly scaled(const LaurentPoly& s) const {
    UniPoly r;
    for (const auto& [d, c] : terms_) r.add_term(d, c * s);
    return r;
  }

  friend bool operator==(const UniPoly&, const UniPoly&) = default;

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      if (!out.empty()) out += " + ";
      std::string c = it->second.to_string();
      if (it->second.num_terms() > 1) c = "(" + c + ")";
      out += c;
      if (it->first > 0) {
        out += "*z";
        if (it->first > 1) out += "^" + std::to_string(it->first);
      }
    }
    return out;
  }

 private:
  std::map<int, LaurentPoly> terms_;
};

// Single-base Q-number 1 + Q + ... + Q^{n-1}.
inline LaurentPoly q_number_base_Q(int n) {
  LaurentPoly sum;
  for (int i = 0; i < n; ++i) sum += LaurentPoly::Q(i);
  return sum;
}

// M: z^n -> Q^n z^n, termwise.
inline UniPoly apply_M(const UniPoly& p) {
  UniPoly r;
  for (const auto& [d, c] : p.terms()) r.add_term(d, c * LaurentPoly::Q(d));
  return r;
}

// D: z^n -> [n]_Q z^{n-1}; constants map to zero.
inline UniPoly apply_D(const UniPoly& p) {
  UniPoly r;
  for (const auto& [d, c] : p.terms())
    if (d > 0) r.add_term(d - 1, c * q_number_base_Q(d));
  return r;
}

// Applies a normal-ordered word sum c x^a y^b with x read as M and y
// as D: powers of D first, then powers of M.
inline UniPoly apply_operator_poly(const NCPoly& op, const UniPoly& p) {
  UniPoly out;
  for (const auto& [e, c] : op.terms()) {
    UniPoly cur = p;
    for (int i = 0; i < e.y; ++i) cur = apply_D(cur);
    for (int i = 0; i < e.x; ++i) cur = apply_M(cur);
    out += cur.scaled(c);
  }
  return out;
}

// Applies (M + c_0 D)(M + c_1 D)...(M + c_last D), rightmost factor
// first as composition demands.
inline UniPoly apply_factored(const std::vector<LaurentPoly>& cs,
                              const UniPoly& p) {
  UniPoly cur = p;
  for (auto it = cs.rbegin(); it != cs.rend(); ++it) {
    UniPoly m = apply_M(cur);
    m += apply_D(cur).scaled(*it);
    cur = std::move(m);
  }
  return cur;
}

// D(M(z^n)) == Q * M(D(z^n)) for all n <= degree_max.
inline bool verify_qcommutation(int degree_max) {
  for (int n = 0; n <= degree_max; ++n) {
    UniPoly zn = UniPoly::monomial(n);
    UniPoly lhs = apply_D(apply_M(zn));
    UniPoly rhs = apply_M(apply_D(zn)).scaled(LaurentPoly::Q());
    if (!(lhs == rhs)) return false;
  }
  return true;
}

// For every n <= n_max and basis monomial z^m, m <= degree_max, the
// factored product (M+D)(M+qD)...(M+q^{n-1}D) and the closed-form sum
// sum_k [n k]_{Q,q} q^{k(k-1)/2} M^{n-k} D^k act identically.
inline Report verify_operator_binomial(int n_max, int degree_max,
                                       const VerifyOptions& opts = {}) {
  Report rep{"operators", {}};
  rep.cases = run_indexed_cases(
      1, n_max,
      [degree_max](int n) {
        std::vector<LaurentPoly> cs;
        for (int k = 0; k < n; ++k) cs.push_back(LaurentPoly::q(k));
        NCPoly expansion = theorem_expansion(n);
        CheckResult r;
        r.name = "n=" + std::to_string(n);
        r.passed = true;
        for (int m = 0; m <= degree_max && r.passed; ++m) {
          UniPoly zm = UniPoly::monomial(m);
          UniPoly factored = apply_factored(cs, zm);
          UniPoly summed = apply_operator_poly(expansion, zm);
          if (!(factored == summed)) {
            r.passed = false;
            r.detail = "on z^" + std::to_string(m) + ": " +
                       factored.to_string() + " != " + summed.to_string();
          }
        }
        return r;
      },
      opts.parallel);
  return rep;
}

}  // namespace qqcalc
