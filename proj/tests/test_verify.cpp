#include <catch2/catch_amalgamated.hpp>

#include "qqcalc/verify.hpp"

using namespace qqcalc;

namespace {

// Exact-rational instantiation at (q0, Q0) = (2, 3): products are
// recomputed with rational arithmetic, expansions built from evaluated
// coefficients, so neither side reuses the symbolic path.
const Rational kQ0 = 2;  // value of q
const Rational kR0 = 3;  // value of Q

using RatPoly = NCPolyT<Rational>;

RatPoly rational_product(const std::vector<Rational>& factors, Direction dir) {
  return ordered_product_over(factors, kR0, dir);
}

RatPoly evaluated(const NCPoly& symbolic, Rational relation) {
  return transform_coefficients(symbolic, std::move(relation),
                                [](const LaurentPoly& c) {
                                  return evaluate_rational(c, kQ0, kR0);
                                });
}

}  // namespace

TEST_CASE("main theorem verifies through n = 12") {
  Report rep = verify_main_theorem(12);
  REQUIRE(rep.cases.size() == 13);
  REQUIRE(rep.all_passed());
}

TEST_CASE("fault injection surfaces a term-level diff") {
  VerifyOptions opts;
  opts.fault_n = 4;
  Report rep = verify_main_theorem(4, opts);
  REQUIRE_FALSE(rep.all_passed());
  REQUIRE_FALSE(rep.cases.back().passed);
  REQUIRE(rep.cases.back().detail.find("x^3*y^1") != std::string::npos);
  // every clean order still passes
  for (std::size_t i = 0; i + 1 < rep.cases.size(); ++i)
    REQUIRE(rep.cases[i].passed);
}

TEST_CASE("ordered-product relation through N = 6") {
  REQUIRE(verify_order_relation(6).all_passed());
}

TEST_CASE("symmetric-calculus identity through n = 6") {
  REQUIRE(verify_symmetric_q1(6).all_passed());
}

TEST_CASE("order reversal through N = 6") {
  REQUIRE(verify_order_reversal(6).all_passed());
}

TEST_CASE("descending expansion through N = 6") {
  REQUIRE(verify_descending_expansion(6).all_passed());
}

TEST_CASE("all six degenerations pass") {
  REQUIRE(verify_special_case_gauss(8).all_passed());
  REQUIRE(verify_special_case_noncommutative(8).all_passed());
  REQUIRE(verify_special_case_symmetric(6).all_passed());
  REQUIRE(verify_special_case_newton(8).all_passed());
  REQUIRE(verify_special_case_golden(6).all_passed());
  REQUIRE(verify_special_case_commutative(6).all_passed());
  REQUIRE(verify_special_cases(4).all_passed());
}

TEST_CASE("parallel execution reports identically") {
  VerifyOptions serial, parallel;
  parallel.parallel = true;
  REQUIRE(verify_main_theorem(8, serial).to_text() ==
          verify_main_theorem(8, parallel).to_text());
  REQUIRE(verify_special_cases(5, serial).to_text() ==
          verify_special_cases(5, parallel).to_text());
  REQUIRE(verify_order_relation(5, serial).to_text() ==
          verify_order_relation(5, parallel).to_text());
}

TEST_CASE("main theorem at rational bases") {
  for (int n = 0; n <= 8; ++n) {
    std::vector<Rational> factors;
    for (int k = 0; k < n; ++k) factors.push_back(rational_pow(kQ0, k));
    RatPoly product = rational_product(factors, Direction::ascending);
    RatPoly expansion = evaluated(theorem_expansion(n), kR0);
    REQUIRE(product == expansion);
  }
}

TEST_CASE("ordered-product relation at rational bases") {
  for (int N = 0; N <= 6; ++N) {
    std::vector<Rational> lt, gt;
    for (int k = 0; k <= N; ++k) {
      lt.push_back(rational_pow(kQ0, k));
      gt.push_back(rational_pow(kQ0, k) * rational_pow(kR0, N - 2 * k));
    }
    REQUIRE(rational_product(lt, Direction::ascending) ==
            rational_product(gt, Direction::descending));
  }
}

TEST_CASE("symmetric-calculus identity at rational bases") {
  for (int n = 1; n <= 6; ++n) {
    RatPoly xy = RatPoly::linear_factor(kR0, Rational(1));
    std::vector<Rational> fs;
    for (int j = 0; j < n; ++j)
      fs.push_back(rational_pow(kR0, -(n - 1) + 2 * j));
    REQUIRE(xy.pow(n) == rational_product(fs, Direction::ascending));
  }
}

TEST_CASE("order reversal at rational bases") {
  for (int N = 1; N <= 6; ++N) {
    std::vector<Rational> asc, desc;
    for (int k = 0; k < N; ++k) {
      asc.push_back(rational_pow(kQ0, k));
      desc.push_back(rational_pow(kQ0, k) *
                     rational_pow(kR0, (N - 1) - 2 * k));
    }
    REQUIRE(rational_product(asc, Direction::ascending) ==
            rational_product(desc, Direction::descending));
  }
}

TEST_CASE("descending expansion at rational bases") {
  for (int N = 1; N <= 6; ++N) {
    std::vector<Rational> factors;
    for (int k = 0; k < N; ++k) factors.push_back(rational_pow(kQ0, k));
    RatPoly product = rational_product(factors, Direction::descending);

    RatPoly expansion(kR0);
    const Rational rebased = kQ0 * kR0 * kR0;  // value of qQ^2
    for (int k = 0; k <= N; ++k) {
      // two-base binomial at bases (qQ^2, Q), evaluated
      Rational coeff = evaluate_rational(
          substitute_monomials(qq_binomial(N, k), LaurentPoly::Q(),
                               LaurentPoly::monomial(1, 1, 2)),
          kQ0, kR0);
      coeff *= rational_pow(rebased, t_exponent(N, k));
      coeff *= rational_pow(kR0, -k * (N - 1));
      expansion.add_term(N - k, k, coeff);
    }
    REQUIRE(product == expansion);
  }
}
