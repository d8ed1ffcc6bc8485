#pragma once

// Exact arithmetic in Z[phi], phi^2 = phi + 1.
//
// Carrier for the golden-ratio specialization: the two bases map to
// Q -> phi and q -> 1 - phi (= -1/phi, still a unit), so every Laurent
// polynomial evaluates exactly in this ring. Fibonacci numbers appear
// as phi^n = F_{n-1} + F_n * phi.

#include <string>
#include <vector>

#include "qqcalc/errors.hpp"
#include "qqcalc/laurent.hpp"

namespace qqcalc {

class GoldenNum {
 public:
  GoldenNum() = default;
  GoldenNum(BigInt a, BigInt b) : a_(std::move(a)), b_(std::move(b)) {}

  static GoldenNum zero() { return {}; }
  static GoldenNum one() { return {1, 0}; }
  static GoldenNum phi() { return {0, 1}; }
  static GoldenNum one_minus_phi() { return {1, -1}; }
  static GoldenNum from_int(BigInt n) { return {std::move(n), 0}; }

  const BigInt& a() const { return a_; }  // rational part
  const BigInt& b() const { return b_; }  // coefficient of phi

  bool is_zero() const { return a_ == 0 && b_ == 0; }

  // N(a + b*phi) = a^2 + ab - b^2; multiplicative, +-1 exactly on units.
  BigInt norm() const { return a_ * a_ + a_ * b_ - b_ * b_; }

  bool is_unit() const {
    BigInt n = norm();
    return n == 1 || n == -1;
  }

  // Galois conjugate (phi -> 1 - phi): (a + b) - b*phi.
  GoldenNum conjugate() const { return {a_ + b_, -b_}; }

  GoldenNum inverse() const {
    BigInt n = norm();
    if (n == 1) return conjugate();
    if (n == -1) return -conjugate();
    throw NonUnitInverse("golden inverse of non-unit");
  }

  friend GoldenNum operator+(const GoldenNum& x, const GoldenNum& y) {
    return {x.a_ + y.a_, x.b_ + y.b_};
  }

  friend GoldenNum operator-(const GoldenNum& x, const GoldenNum& y) {
    return {x.a_ - y.a_, x.b_ - y.b_};
  }

  GoldenNum operator-() const { return {-a_, -b_}; }

  // (a+b*phi)(c+d*phi) = ac+bd + (ad+bc+bd)*phi after phi^2 = phi+1.
  friend GoldenNum operator*(const GoldenNum& x, const GoldenNum& y) {
    return {x.a_ * y.a_ + x.b_ * y.b_,
            x.a_ * y.b_ + x.b_ * y.a_ + x.b_ * y.b_};
  }

  GoldenNum& operator+=(const GoldenNum& o) { return *this = *this + o; }
  GoldenNum& operator*=(const GoldenNum& o) { return *this = *this * o; }

  GoldenNum pow(int n) const {
    GoldenNum base = n < 0 ? inverse() : *this;
    GoldenNum r = one();
    for (int i = 0, m = n < 0 ? -n : n; i < m; ++i) r *= base;
    return r;
  }

  friend bool operator==(const GoldenNum&, const GoldenNum&) = default;

  std::string to_string() const {
    if (b_ == 0) return a_.str();
    std::string s;
    if (a_ != 0) s = a_.str() + (b_ < 0 ? "" : "+");
    BigInt b = b_;
    if (b == -1)
      s += '-';
    else if (b != 1)
      s += b.str() + "*";
    s += "phi";
    return s;
  }

 private:
  BigInt a_ = 0;
  BigInt b_ = 0;
};

inline BigInt fibonacci(int n) {
  BigInt a = 0, b = 1;  // F_0, F_1
  for (int i = 0; i < n; ++i) {
    BigInt next = a + b;
    a = b;
    b = next;
  }
  return a;
}

// The two-base number at (Q, q) = (phi, 1-phi) as the geometric sum
// sum_{i<n} phi^{n-1-i} (1-phi)^i; always a plain integer, equal to F_n.
inline GoldenNum golden_qnumber(int n) {
  GoldenNum sum = GoldenNum::zero();
  for (int i = 0; i < n; ++i)
    sum += GoldenNum::phi().pow(n - 1 - i) * GoldenNum::one_minus_phi().pow(i);
  return sum;
}

// Evaluates a Laurent polynomial at q = 1-phi, Q = phi. Both images are
// units, so negative exponents stay exact.
inline GoldenNum evaluate_golden(const LaurentPoly& p) {
  GoldenNum sum = GoldenNum::zero();
  for (const auto& [e, c] : p.terms())
    sum += GoldenNum::from_int(c) * GoldenNum::one_minus_phi().pow(e.eq) *
           GoldenNum::phi().pow(e.eQ);
  return sum;
}

// F_n! / (F_k! F_{n-k}!) by exact integer division; the quotient is
// always integral.
inline BigInt fibonomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  auto fib_factorial = [](int m) {
    BigInt f = 1;
    for (int i = 1; i <= m; ++i) f *= fibonacci(i);
    return f;
  };
  BigInt num = fib_factorial(n);
  BigInt den = fib_factorial(k) * fib_factorial(n - k);
  BigInt quotient, remainder;
  boost::multiprecision::divide_qr(num, den, quotient, remainder);
  if (remainder != 0)
    throw std::logic_error("fibonomial quotient not integral");
  return quotient;
}

}  // namespace qqcalc
