#pragma once

// Truncated two-base exponential series and the factorization check
// e(x+y)_{<q} = e(x) E(y) at finite truncation order.
//
// Coefficients are unreduced fractions of Laurent polynomials: there is
// no multivariate GCD here, so fractions are never normalized and
// equality is decided by cross-multiplication. Truncation is by total
// degree, which is additive, so multiply-then-truncate per partial
// product is exact.

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qqcalc/errors.hpp"
#include "qqcalc/laurent.hpp"
#include "qqcalc/ncpoly.hpp"
#include "qqcalc/qcombinatorics.hpp"
#include "qqcalc/report.hpp"

namespace qqcalc {

class Frac {
 public:
  Frac() : num_(), den_(LaurentPoly::one()) {}

  Frac(LaurentPoly num, LaurentPoly den)
      : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::invalid_argument("zero denominator");
  }

  static Frac of(LaurentPoly p) { return Frac(std::move(p), LaurentPoly::one()); }
  static Frac one() { return of(LaurentPoly::one()); }

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }

  friend Frac operator+(const Frac& a, const Frac& b) {
    return Frac(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }

  friend Frac operator*(const Frac& a, const Frac& b) {
    return Frac(a.num_ * b.num_, a.den_ * b.den_);
  }

  Frac operator-() const { return Frac(-num_, den_); }

  // a/b = c/d iff ad = cb; fractions are never reduced.
  friend bool operator==(const Frac& a, const Frac& b) {
    return a.num_ * b.den_ == b.num_ * a.den_;
  }

  std::string to_string() const {
    if (den_.is_one()) return num_.to_string();
    std::string n = num_.to_string();
    if (num_.num_terms() > 1) n = "(" + n + ")";
    return n + "/(" + den_.to_string() + ")";
  }

 private:
  LaurentPoly num_;
  LaurentPoly den_;
};

enum class Generator { x, y };

// Noncommutative power series in x, y truncated at a fixed total
// degree, over the relation yx = R*xy.
class TruncSeries {
 public:
  TruncSeries(int order, RelationConst relation)
      : order_(order), relation_(relation) {}

  static TruncSeries unit(int order, RelationConst relation) {
    TruncSeries s(order, relation);
    s.add_term(0, 0, Frac::one());
    return s;
  }

  int order() const { return order_; }
  const RelationConst& relation() const { return relation_; }
  const std::map<XYDegree, Frac, XYDegreeOrder>& terms() const {
    return terms_;
  }

  // Terms beyond the truncation order are discarded.
  void add_term(int x, int y, const Frac& c) {
    if (x + y > order_ || c.is_zero()) return;
    auto it = terms_.find({x, y});
    if (it == terms_.end()) {
      terms_.emplace(XYDegree{x, y}, c);
    } else {
      it->second = it->second + c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  TruncSeries& operator+=(const TruncSeries& o) {
    require_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e.x, e.y, c);
    return *this;
  }

  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
    a.require_compatible(b);
    TruncSeries r(a.order_, a.relation_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        if (ea.x + eb.x + ea.y + eb.y > a.order_) continue;
        Frac scale = Frac::of(a.relation_.pow(ea.y * eb.x));
        r.add_term(ea.x + eb.x, ea.y + eb.y, ca * cb * scale);
      }
    return r;
  }

  // Termwise Frac equality at matching order and relation.
  friend bool operator==(const TruncSeries& a, const TruncSeries& b) {
    if (a.order_ != b.order_ || !(a.relation_ == b.relation_)) return false;
    if (a.terms_.size() != b.terms_.size()) return false;
    auto ia = a.terms_.begin();
    auto ib = b.terms_.begin();
    for (; ia != a.terms_.end(); ++ia, ++ib)
      if (!(ia->first == ib->first) || !(ia->second == ib->second))
        return false;
    return true;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    // total degree ascending, then x-degree descending
    std::vector<std::pair<XYDegree, Frac>> ordered(terms_.begin(),
                                                   terms_.end());
    std::sort(ordered.begin(), ordered.end(),
              [](const auto& a, const auto& b) {
                int da = a.first.x + a.first.y, db = b.first.x + b.first.y;
                if (da != db) return da < db;
                return a.first.x > b.first.x;
              });
    std::string out;
    for (const auto& [e, c] : ordered) {
      if (!out.empty()) out += " + ";
      std::string vars;
      if (e.x > 0) vars = e.x > 1 ? "x^" + std::to_string(e.x) : "x";
      if (e.y > 0) {
        if (!vars.empty()) vars += "*";
        vars += e.y > 1 ? "y^" + std::to_string(e.y) : "y";
      }
      if (vars.empty()) {
        out += c.to_string();
      } else if (c.num().is_one() && c.den().is_one()) {
        out += vars;
      } else {
        std::string cs = c.to_string();
        if (c.den().is_one() && c.num().num_terms() > 1) cs = "(" + cs + ")";
        out += cs + "*" + vars;
      }
    }
    return out;
  }

 private:
  void require_compatible(const TruncSeries& o) const {
    if (order_ != o.order_)
      throw std::invalid_argument("truncation orders differ");
    if (!(relation_ == o.relation_))
      throw RelationMismatch("series relations differ");
  }

  int order_;
  RelationConst relation_;
  std::map<XYDegree, Frac, XYDegreeOrder> terms_;
};

// e(v) = sum_{n<=N} v^n / [n]!
inline TruncSeries exp_small(int N, Generator g = Generator::x) {
  TruncSeries s(N, RelationConst::Q());
  for (int n = 0; n <= N; ++n)
    s.add_term(g == Generator::x ? n : 0, g == Generator::x ? 0 : n,
               Frac(LaurentPoly::one(), qq_factorial(n)));
  return s;
}

// E(v) = sum_{n<=N} q^{n(n-1)/2} v^n / [n]!
inline TruncSeries exp_big(int N, Generator g = Generator::y) {
  TruncSeries s(N, RelationConst::Q());
  for (int n = 0; n <= N; ++n)
    s.add_term(g == Generator::x ? n : 0, g == Generator::x ? 0 : n,
               Frac(LaurentPoly::q(n * (n - 1) / 2), qq_factorial(n)));
  return s;
}

// e applied to the ordered binomial: sum_{n<=N} (x+y)^n_{<q} / [n]!
inline TruncSeries exp_of_binomial(int N) {
  TruncSeries s(N, RelationConst::Q());
  for (int n = 0; n <= N; ++n) {
    Frac inv_fact(LaurentPoly::one(), qq_factorial(n));
    NCPoly expansion = binomial_lt(n, RelationConst::Q());
    for (const auto& [e, c] : expansion.terms())
      s.add_term(e.x, e.y, Frac::of(c) * inv_fact);
  }
  return s;
}

// e(x+y)_{<q} == e(x) * E(y) at every truncation order N <= N_max.
inline Report verify_factorization(int N_max, const VerifyOptions& opts = {}) {
  Report rep{"exp-factorization", {}};
  rep.cases = run_indexed_cases(
      0, N_max,
      [](int N) {
        TruncSeries lhs = exp_of_binomial(N);
        TruncSeries rhs = exp_small(N, Generator::x) * exp_big(N, Generator::y);
        CheckResult r;
        r.name = "N=" + std::to_string(N);
        r.passed = lhs == rhs;
        if (!r.passed)
          r.detail = lhs.to_string() + " != " + rhs.to_string();
        return r;
      },
      opts.parallel);
  return rep;
}

// At q -> 1 both exponentials collapse to the same (Jackson) series.
inline Report verify_exp_degeneration(int N_max,
                                      const VerifyOptions& opts = {}) {
  Report rep{"exp-degeneration", {}};
  auto drop_q = [](const LaurentPoly& p) {
    return substitute_monomials(p, LaurentPoly::one(), LaurentPoly::Q());
  };
  rep.cases = run_indexed_cases(
      0, N_max,
      [&drop_q](int N) {
        CheckResult r;
        r.name = "N=" + std::to_string(N);
        r.passed = true;
        TruncSeries small = exp_small(N, Generator::x);
        TruncSeries big = exp_big(N, Generator::x);
        for (int n = 0; n <= N; ++n) {
          auto find = [&](const TruncSeries& s) {
            auto it = s.terms().find({n, 0});
            return it == s.terms().end() ? Frac() : it->second;
          };
          Frac a = find(small), b = find(big);
          Frac a1(drop_q(a.num()), drop_q(a.den()));
          Frac b1(drop_q(b.num()), drop_q(b.den()));
          if (!(a1 == b1)) {
            r.passed = false;
            r.detail = "x^" + std::to_string(n) + ": " + a1.to_string() +
                       " != " + b1.to_string();
            break;
          }
        }
        return r;
      },
      opts.parallel);
  return rep;
}

}  // namespace qqcalc
