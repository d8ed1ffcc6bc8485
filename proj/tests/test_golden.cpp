#include <catch2/catch_amalgamated.hpp>

#include "qqcalc/golden.hpp"
#include "qqcalc/qcombinatorics.hpp"
#include "test_util.hpp"

using namespace qqcalc;
using qqtest::make_rng;
using qqtest::random_golden;

TEST_CASE("defining relation and inverses") {
  GoldenNum phi = GoldenNum::phi();
  REQUIRE(phi * phi == GoldenNum(1, 1));
  REQUIRE(phi * (phi - GoldenNum::one()) == GoldenNum::one());
  REQUIRE(phi.pow(5) == GoldenNum(3, 5));  // (F_4, F_5)
  REQUIRE(phi.inverse() == GoldenNum(-1, 1));
  REQUIRE(phi.pow(-3) * phi.pow(3) == GoldenNum::one());
  REQUIRE(GoldenNum::one_minus_phi() * (-phi) == GoldenNum::one());
  REQUIRE_THROWS_AS(GoldenNum::from_int(2).pow(-1), NonUnitInverse);
  REQUIRE_THROWS_AS(GoldenNum(2, 2).inverse(), NonUnitInverse);
}

TEST_CASE("fibonacci recurrence values") {
  REQUIRE(fibonacci(0) == 0);
  REQUIRE(fibonacci(1) == 1);
  REQUIRE(fibonacci(5) == 5);
  REQUIRE(fibonacci(10) == 55);
  for (int n = 2; n <= 40; ++n)
    REQUIRE(fibonacci(n) == fibonacci(n - 1) + fibonacci(n - 2));
}

TEST_CASE("golden two-base numbers are Fibonacci numbers") {
  REQUIRE(golden_qnumber(0) == GoldenNum::zero());
  REQUIRE(golden_qnumber(2) == GoldenNum(1, 0));
  REQUIRE(golden_qnumber(5) == GoldenNum(5, 0));
  for (int n = 0; n <= 30; ++n)
    REQUIRE(golden_qnumber(n) == GoldenNum::from_int(fibonacci(n)));
}

TEST_CASE("norm is multiplicative") {
  auto rng = make_rng(57);
  for (int i = 0; i < 300; ++i) {
    GoldenNum x = random_golden(rng);
    GoldenNum y = random_golden(rng);
    REQUIRE((x * y).norm() == x.norm() * y.norm());
  }
}

TEST_CASE("substituted binomial coefficients are Fibonomials") {
  // the factorial-quotient route is the independent oracle for the
  // substitution pipeline
  for (int n = 0; n <= 12; ++n) {
    for (int k = 0; k <= n; ++k) {
      GoldenNum substituted = evaluate_golden(qq_binomial(n, k));
      BigInt expected = fibonomial(n, k);
      REQUIRE(substituted.b() == 0);
      REQUIRE(substituted.a() == expected);
      REQUIRE(expected >= 0);
    }
  }
  REQUIRE(fibonomial(5, 2) == 15);
  REQUIRE(evaluate_golden(qq_binomial(5, 2)) == GoldenNum::from_int(15));
}

TEST_CASE("golden evaluation respects ring structure") {
  auto rng = make_rng(63);
  for (int i = 0; i < 100; ++i) {
    LaurentPoly a = qqtest::random_laurent(rng);
    LaurentPoly b = qqtest::random_laurent(rng);
    REQUIRE(evaluate_golden(a * b) ==
            evaluate_golden(a) * evaluate_golden(b));
    REQUIRE(evaluate_golden(a + b) ==
            evaluate_golden(a) + evaluate_golden(b));
  }
}
