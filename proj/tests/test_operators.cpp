#include <catch2/catch_amalgamated.hpp>

#include "qqcalc/qoperators.hpp"
#include "test_util.hpp"

using namespace qqcalc;

TEST_CASE("dilatation acts on eigenvectors") {
  REQUIRE(apply_M(UniPoly::monomial(2)) ==
          UniPoly::monomial(2, LaurentPoly::Q(2)));
  REQUIRE(apply_M(UniPoly::monomial(0)) == UniPoly::monomial(0));

  UniPoly p = UniPoly::monomial(1);
  p += UniPoly::monomial(3);
  UniPoly expected = UniPoly::monomial(1, LaurentPoly::Q());
  expected += UniPoly::monomial(3, LaurentPoly::Q(3));
  REQUIRE(apply_M(p) == expected);
}

TEST_CASE("difference operator lowers degree with Q-numbers") {
  REQUIRE(apply_D(UniPoly::monomial(1)) == UniPoly::monomial(0));
  REQUIRE(apply_D(UniPoly::monomial(3)) ==
          UniPoly::monomial(2, q_number_base_Q(3)));
  REQUIRE(apply_D(UniPoly::monomial(0, LaurentPoly::constant(5))).is_zero());
}

TEST_CASE("operator action is determined termwise") {
  auto rng = qqtest::make_rng(19);
  for (int i = 0; i < 50; ++i) {
    UniPoly p;
    std::uniform_int_distribution<int> deg(0, 6);
    for (int t = 0; t < 3; ++t)
      p.add_term(deg(rng), qqtest::random_laurent(rng, 2, 2, 5));
    UniPoly expect_m, expect_d;
    for (const auto& [d, c] : p.terms()) {
      expect_m += apply_M(UniPoly::monomial(d)).scaled(c);
      expect_d += apply_D(UniPoly::monomial(d)).scaled(c);
    }
    REQUIRE(apply_M(p) == expect_m);
    REQUIRE(apply_D(p) == expect_d);
  }
}

TEST_CASE("defining quotient is recovered") {
  // (Q-1) z D(z^n) = (M-1)(z^n)
  for (int n = 0; n <= 10; ++n) {
    UniPoly dz = apply_D(UniPoly::monomial(n));
    UniPoly lhs;
    for (const auto& [d, c] : dz.terms())
      lhs.add_term(d + 1, c * (LaurentPoly::Q() - LaurentPoly::one()));
    UniPoly rhs = apply_M(UniPoly::monomial(n));
    rhs += UniPoly::monomial(n, -LaurentPoly::one());
    REQUIRE(lhs == rhs);
  }
}

TEST_CASE("operators Q-commute") {
  REQUIRE(verify_qcommutation(0));
  REQUIRE(verify_qcommutation(1));
  REQUIRE(verify_qcommutation(8));
}

TEST_CASE("operator realization of the binomial expansion") {
  Report rep = verify_operator_binomial(6, 8);
  REQUIRE(rep.cases.size() == 6);
  REQUIRE(rep.all_passed());
}

TEST_CASE("single factor applied both ways") {
  for (int m = 0; m <= 4; ++m) {
    UniPoly zm = UniPoly::monomial(m);
    UniPoly factored = apply_factored({LaurentPoly::one()}, zm);
    UniPoly direct = apply_M(zm);
    direct += apply_D(zm);
    REQUIRE(factored == direct);
  }
}
