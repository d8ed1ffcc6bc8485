#pragma once

// Exact arithmetic in the Laurent polynomial ring Z[q^{+-1}, Q^{+-1}].
//
// A LaurentPoly is a sparse, canonical collection of terms
// c * q^eq * Q^eQ with arbitrary-precision integer coefficients.
// Zero coefficients are never stored, so structural equality is ring
// equality. Negative exponents are first-class; the only units of the
// ring are the monomials +-q^a Q^b, and only those can be inverted.

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <sstream>
#include <string>
#include <utility>

#include "qqcalc/errors.hpp"

namespace qqcalc {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

struct ExponentPair {
  int eq = 0;  // power of q
  int eQ = 0;  // power of Q
  friend bool operator==(const ExponentPair&, const ExponentPair&) = default;
};

// Canonical total order on term keys: lexicographic on (eQ, eq).
// Printed output and the serialized form both rely on this order being
// stable.
struct ExponentOrder {
  bool operator()(const ExponentPair& a, const ExponentPair& b) const noexcept {
    if (a.eQ != b.eQ) return a.eQ < b.eQ;
    return a.eq < b.eq;
  }
};

class LaurentPoly {
 public:
  using TermMap = std::map<ExponentPair, BigInt, ExponentOrder>;

  LaurentPoly() = default;

  static LaurentPoly zero() { return LaurentPoly(); }

  static LaurentPoly constant(BigInt c) {
    LaurentPoly p;
    p.add_term({0, 0}, std::move(c));
    return p;
  }

  static LaurentPoly one() { return constant(1); }

  static LaurentPoly monomial(BigInt c, int eq, int eQ) {
    LaurentPoly p;
    p.add_term({eq, eQ}, std::move(c));
    return p;
  }

  static LaurentPoly q(int e = 1) { return monomial(1, e, 0); }
  static LaurentPoly Q(int e = 1) { return monomial(1, 0, e); }

  bool is_zero() const { return terms_.empty(); }

  bool is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == ExponentPair{0, 0} &&
           terms_.begin()->second == 1;
  }

  // True iff the polynomial is a single term c * q^a Q^b with c = +-1.
  bool is_unit_monomial() const {
    if (terms_.size() != 1) return false;
    const BigInt& c = terms_.begin()->second;
    return c == 1 || c == -1;
  }

  std::size_t num_terms() const { return terms_.size(); }

  const TermMap& terms() const { return terms_; }

  BigInt coeff(const ExponentPair& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? BigInt(0) : it->second;
  }

  void add_term(const ExponentPair& e, const BigInt& c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, c);
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }

  LaurentPoly& operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) {
    a += b;
    return a;
  }

  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) {
    a -= b;
    return a;
  }

  LaurentPoly operator-() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
  }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_)
        r.add_term({ea.eq + eb.eq, ea.eQ + eb.eQ}, ca * cb);
    return r;
  }

  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  // Integer power. Negative exponents are defined only for the units of
  // the ring, i.e. single terms with coefficient +-1.
  LaurentPoly pow(int n) const {
    if (n < 0) {
      if (!is_unit_monomial())
        throw NonUnitInverse("pow(" + std::to_string(n) +
                             "): only unit monomials are invertible");
      const auto& [e, c] = *terms_.begin();
      // (+-1)^n with negated-and-scaled exponents
      return monomial(n % 2 == 0 ? BigInt(1) : c, e.eq * n, e.eQ * n);
    }
    LaurentPoly r = one();
    for (int i = 0; i < n; ++i) r *= *this;
    return r;
  }

  // Exchanges the two bases q <-> Q in every term.
  LaurentPoly swap_bases() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(ExponentPair{e.eQ, e.eq}, c);
    return r;
  }

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  // Rendered with terms in descending canonical order so the Q-leading
  // term comes first, e.g. "Q^2+Q*q+q^2" or "2*Q^2*q^3".
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [e, c] = *it;
      BigInt a = c;
      if (first) {
        if (a < 0) {
          os << '-';
          a = -a;
        }
        first = false;
      } else {
        os << (a < 0 ? '-' : '+');
        if (a < 0) a = -a;
      }
      os << monomial_string(a, e);
    }
    return os.str();
  }

 private:
  static std::string monomial_string(const BigInt& abs_coeff,
                                     const ExponentPair& e) {
    std::ostringstream os;
    bool printed = false;
    if (abs_coeff != 1 || (e.eq == 0 && e.eQ == 0)) {
      os << abs_coeff.str();
      printed = true;
    }
    auto var = [&](const char* name, int exp) {
      if (exp == 0) return;
      if (printed) os << '*';
      os << name;
      if (exp != 1) os << '^' << exp;
      printed = true;
    };
    var("Q", e.eQ);
    var("q", e.eq);
    return os.str();
  }

  TermMap terms_;
};

// Substitutes monomials for the two bases: every term c q^a Q^b maps to
// c * q_to^a * Q_to^b. Both images must be single-term monomials so the
// map stays inside the ring (negative source exponents invert them).
inline LaurentPoly substitute_monomials(const LaurentPoly& p,
                                        const LaurentPoly& q_to,
                                        const LaurentPoly& Q_to) {
  LaurentPoly r;
  for (const auto& [e, c] : p.terms()) {
    LaurentPoly t = LaurentPoly::constant(c);
    if (e.eq != 0) t *= q_to.pow(e.eq);
    if (e.eQ != 0) t *= Q_to.pow(e.eQ);
    r += t;
  }
  return r;
}

inline Rational rational_pow(const Rational& base, int e) {
  if (e == 0) return Rational(1);
  if (base == 0 && e < 0)
    throw ZeroBase("negative exponent at base zero");
  Rational r = 1;
  const Rational b = e < 0 ? Rational(1) / base : base;
  for (int i = 0, n = e < 0 ? -e : e; i < n; ++i) r *= b;
  return r;
}

// Exact evaluation at rational points q = q0, Q = Q0.
inline Rational evaluate_rational(const LaurentPoly& p, const Rational& q0,
                                  const Rational& Q0) {
  Rational sum = 0;
  for (const auto& [e, c] : p.terms())
    sum += Rational(c) * rational_pow(q0, e.eq) * rational_pow(Q0, e.eQ);
  return sum;
}

}  // namespace qqcalc
