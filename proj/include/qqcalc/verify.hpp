#pragma once

// Symbolic verification of the binomial identities: each suite expands
// both sides of an identity independently (brute-force normal-ordering
// multiplication against the closed-form sum) and compares exactly.
// Failures are report entries carrying the first mismatching term, not
// exceptions.

#include <string>
#include <vector>

#include "qqcalc/golden.hpp"
#include "qqcalc/ncpoly.hpp"
#include "qqcalc/qcombinatorics.hpp"
#include "qqcalc/report.hpp"

namespace qqcalc {

// (x+y)(x+qy)...(x+q^{n-1}y) == sum_k [n k]_{Q,q} q^{k(k-1)/2} x^{n-k} y^k
// for all n <= n_max, with yx = Qxy.
inline Report verify_main_theorem(int n_max, const VerifyOptions& opts = {}) {
  Report rep{"theorem", {}};
  rep.cases = run_indexed_cases(
      0, n_max,
      [&](int n) {
        NCPoly product = binomial_lt(n, RelationConst::Q());
        NCPoly expansion = theorem_expansion(n);
        if (n == opts.fault_n && n >= 1)
          expansion.add_term(n - 1, 1, LaurentPoly::one());
        return compare_expansions("n=" + std::to_string(n), product,
                                  expansion);
      },
      opts.parallel);
  return rep;
}

// prod_{k=0..N} (x+q^k y) ascending == descending product of the
// factors (x + Q^{N-2k} q^k y).
inline Report verify_order_relation(int N_max, const VerifyOptions& opts = {}) {
  Report rep{"order-relation", {}};
  rep.cases = run_indexed_cases(
      0, N_max,
      [](int N) {
        std::vector<QFactor> lt, gt;
        for (int k = 0; k <= N; ++k) {
          lt.push_back({LaurentPoly::q(k)});
          gt.push_back({LaurentPoly::monomial(1, k, N - 2 * k)});
        }
        return compare_expansions(
            "N=" + std::to_string(N),
            ordered_product(lt, RelationConst::Q(), Direction::ascending),
            ordered_product(gt, RelationConst::Q(), Direction::descending));
      },
      opts.parallel);
  return rep;
}

// Plain power (x+y)^n == ascending product of (x + Q^{-(n-1)+2j} y),
// the symmetric-calculus form of the q = 1 case.
inline Report verify_symmetric_q1(int n_max, const VerifyOptions& opts = {}) {
  Report rep{"symmetric", {}};
  rep.cases = run_indexed_cases(
      1, n_max,
      [](int n) {
        NCPoly xy = NCPoly::linear_factor(LaurentPoly::Q(), LaurentPoly::one());
        std::vector<QFactor> fs;
        for (int j = 0; j < n; ++j)
          fs.push_back({LaurentPoly::Q(-(n - 1) + 2 * j)});
        return compare_expansions(
            "n=" + std::to_string(n), xy.pow(n),
            ordered_product(fs, RelationConst::Q(), Direction::ascending));
      },
      opts.parallel);
  return rep;
}

// (x+y)^N ascending in base q == descending product with factors
// (q/Q^2)^k Q^{N-1}, i.e. (x + Q^{N-1} y)^N_{> q/Q^2}.
inline Report verify_order_reversal(int N_max, const VerifyOptions& opts = {}) {
  Report rep{"reversal", {}};
  rep.cases = run_indexed_cases(
      1, N_max,
      [](int N) {
        std::vector<QFactor> fs;
        for (int k = 0; k < N; ++k)
          fs.push_back({LaurentPoly::monomial(1, k, (N - 1) - 2 * k)});
        return compare_expansions(
            "N=" + std::to_string(N), binomial_lt(N, RelationConst::Q()),
            ordered_product(fs, RelationConst::Q(), Direction::descending));
      },
      opts.parallel);
  return rep;
}

// (x+y)^N descending in base q ==
// sum_k [N k]_{qQ^2,Q} (qQ^2)^{k(k-1)/2} Q^{-k(N-1)} x^{N-k} y^k.
inline Report verify_descending_expansion(int N_max,
                                          const VerifyOptions& opts = {}) {
  Report rep{"descending", {}};
  rep.cases = run_indexed_cases(
      1, N_max,
      [](int N) {
        NCPoly expansion(LaurentPoly::Q());
        for (int k = 0; k <= N; ++k) {
          // two-base binomial rebased to (qQ^2, Q)
          LaurentPoly coeff = substitute_monomials(
              qq_binomial(N, k), LaurentPoly::Q(),
              LaurentPoly::monomial(1, 1, 2));
          coeff *= LaurentPoly::monomial(1, 1, 2).pow(t_exponent(N, k));
          coeff *= LaurentPoly::Q(-k * (N - 1));
          expansion.add_term(N - k, k, coeff);
        }
        return compare_expansions("N=" + std::to_string(N),
                                  binomial_gt(N, RelationConst::Q()),
                                  expansion);
      },
      opts.parallel);
  return rep;
}

// ---------------------------------------------------------------------------
// Special cases of the main identity.

// (i) Q -> 1, commutative x and y: the product reproduces the classical
// Gauss expansion sum_k C_q(n,k) q^{k(k-1)/2} x^{n-k} y^k, and agrees
// with the Q->1 image of the general expansion.
inline Report verify_special_case_gauss(int n_max,
                                        const VerifyOptions& opts = {}) {
  Report rep{"special-gauss", {}};
  rep.cases = run_indexed_cases(
      1, n_max,
      [](int n) {
        NCPoly product = binomial_lt(n, RelationConst::one());
        NCPoly gauss(LaurentPoly::one());
        for (int k = 0; k <= n; ++k)
          gauss.add_term(n - k, k,
                         gaussian_binomial(n, k) *
                             LaurentPoly::q(t_exponent(n, k)));
        auto drop_Q = [](const LaurentPoly& c) {
          return substitute_monomials(c, LaurentPoly::q(), LaurentPoly::one());
        };
        NCPoly substituted = transform_coefficients(
            theorem_expansion(n), LaurentPoly::one(), drop_Q);
        CheckResult r = compare_expansions("n=" + std::to_string(n), product,
                                           gauss);
        if (r.passed && !(substituted == gauss)) {
          r.passed = false;
          r.detail = "Q->1 image differs: " + first_mismatch(substituted, gauss);
        }
        return r;
      },
      opts.parallel);
  return rep;
}

// (ii) q -> 1: the plain power (x+y)^n over yx = Qxy expands with
// single-base Q-binomial coefficients.
inline Report verify_special_case_noncommutative(
    int n_max, const VerifyOptions& opts = {}) {
  Report rep{"special-noncommutative", {}};
  rep.cases = run_indexed_cases(
      1, n_max,
      [](int n) {
        NCPoly xy = NCPoly::linear_factor(LaurentPoly::Q(), LaurentPoly::one());
        NCPoly expansion(LaurentPoly::Q());
        for (int k = 0; k <= n; ++k)
          expansion.add_term(n - k, k, gaussian_binomial(n, k).swap_bases());
        auto drop_q = [](const LaurentPoly& c) {
          return substitute_monomials(c, LaurentPoly::one(), LaurentPoly::Q());
        };
        NCPoly substituted = transform_coefficients(
            theorem_expansion(n), LaurentPoly::Q(), drop_q);
        CheckResult r = compare_expansions("n=" + std::to_string(n), xy.pow(n),
                                           expansion);
        if (r.passed && !(substituted == expansion)) {
          r.passed = false;
          r.detail =
              "q->1 image differs: " + first_mismatch(substituted, expansion);
        }
        return r;
      },
      opts.parallel);
  return rep;
}

// (iii) Q -> 1/q: symmetric calculus; the relation becomes yx = q^{-1}xy
// and the coefficients specialize to symmetric q-binomials.
inline Report verify_special_case_symmetric(int n_max,
                                            const VerifyOptions& opts = {}) {
  Report rep{"special-symmetric", {}};
  rep.cases = run_indexed_cases(
      1, n_max,
      [](int n) {
        NCPoly product = binomial_lt(n, RelationConst::inv_q());
        NCPoly expansion(LaurentPoly::q(-1));
        for (int k = 0; k <= n; ++k)
          expansion.add_term(n - k, k,
                             symmetric_binomial(n, k) *
                                 LaurentPoly::q(t_exponent(n, k)));
        auto to_symmetric = [](const LaurentPoly& c) {
          return substitute_monomials(c, LaurentPoly::q(), LaurentPoly::q(-1));
        };
        NCPoly substituted = transform_coefficients(
            theorem_expansion(n), LaurentPoly::q(-1), to_symmetric);
        CheckResult r = compare_expansions("n=" + std::to_string(n), product,
                                           expansion);
        if (r.passed && !(substituted == expansion)) {
          r.passed = false;
          r.detail = "Q->1/q image differs: " +
                     first_mismatch(substituted, expansion);
        }
        return r;
      },
      opts.parallel);
  return rep;
}

// (iv) Q -> q: coefficients collapse to integer binomials,
// sum_k C(n,k) q^{kn - k(k+1)/2} x^{n-k} y^k, checked against the
// integer Pascal triangle.
inline Report verify_special_case_newton(int n_max,
                                         const VerifyOptions& opts = {}) {
  Report rep{"special-newton", {}};
  rep.cases = run_indexed_cases(
      1, n_max,
      [](int n) {
        NCPoly product = binomial_lt(n, RelationConst::q());
        NCPoly expansion(LaurentPoly::q());
        for (int k = 0; k <= n; ++k)
          expansion.add_term(
              n - k, k,
              LaurentPoly::monomial(integer_binomial(n, k),
                                    k * n - k * (k + 1) / 2, 0));
        auto collapse = [](const LaurentPoly& c) {
          return substitute_monomials(c, LaurentPoly::q(), LaurentPoly::q());
        };
        NCPoly substituted = transform_coefficients(
            theorem_expansion(n), LaurentPoly::q(), collapse);
        CheckResult r = compare_expansions("n=" + std::to_string(n), product,
                                           expansion);
        if (r.passed && !(substituted == expansion)) {
          r.passed = false;
          r.detail =
              "Q->q image differs: " + first_mismatch(substituted, expansion);
        }
        return r;
      },
      opts.parallel);
  return rep;
}

// (v) (Q, q) -> (phi, 1-phi) in Z[phi]: the ordered product over the
// golden relation yx = phi*xy expands with Fibonomial coefficients
// times (1-phi)^{k(k-1)/2}, and the substituted general expansion
// agrees. The Fibonomial side is computed from Fibonacci factorials,
// independent of the recurrence pipeline.
inline Report verify_special_case_golden(int n_max,
                                         const VerifyOptions& opts = {}) {
  Report rep{"special-golden", {}};
  const int number_max = std::max(n_max, 20);
  for (int n = 0; n <= number_max; ++n) {
    CheckResult r;
    r.name = "[" + std::to_string(n) + "]_{phi,1-phi} = F_" + std::to_string(n);
    r.passed = golden_qnumber(n) == GoldenNum::from_int(fibonacci(n)) &&
               evaluate_golden(qq_number(n)) ==
                   GoldenNum::from_int(fibonacci(n));
    if (!r.passed) r.detail = golden_qnumber(n).to_string();
    rep.cases.push_back(std::move(r));
  }
  {
    CheckResult r;
    r.name = "[5 choose 2] at (phi,1-phi) = 15";
    GoldenNum got = evaluate_golden(qq_binomial(5, 2));
    r.passed = got == GoldenNum::from_int(15) && fibonomial(5, 2) == 15;
    if (!r.passed) r.detail = got.to_string();
    rep.cases.push_back(std::move(r));
  }
  auto expansion_case = [](int n) {
    std::vector<GoldenNum> factors;
    for (int k = 0; k < n; ++k)
      factors.push_back(GoldenNum::one_minus_phi().pow(k));
    NCPolyT<GoldenNum> product =
        ordered_product_over(factors, GoldenNum::phi(), Direction::ascending);
    NCPolyT<GoldenNum> fib_side(GoldenNum::phi());
    for (int k = 0; k <= n; ++k)
      fib_side.add_term(n - k, k,
                        GoldenNum::from_int(fibonomial(n, k)) *
                            GoldenNum::one_minus_phi().pow(t_exponent(n, k)));
    NCPolyT<GoldenNum> substituted = transform_coefficients(
        theorem_expansion(n), GoldenNum::phi(),
        [](const LaurentPoly& c) { return evaluate_golden(c); });
    CheckResult r = compare_expansions("expansion n=" + std::to_string(n),
                                       product, fib_side);
    if (r.passed && !(substituted == fib_side)) {
      r.passed = false;
      r.detail = "golden image differs: " + first_mismatch(substituted, fib_side);
    }
    return r;
  };
  auto cases = run_indexed_cases(1, n_max, expansion_case, opts.parallel);
  for (auto& c : cases) rep.cases.push_back(std::move(c));
  return rep;
}

// (vi) R = 1 with commuting x, y: the two-base product
// (x+q^{n-1}y)(x+q^{n-2}Qy)...(x+Q^{n-1}y) equals
// sum_k [n k]_{q,Q} (qQ)^{k(k-1)/2} x^{n-k} y^k.
inline Report verify_special_case_commutative(int n_max,
                                              const VerifyOptions& opts = {}) {
  Report rep{"special-commutative", {}};
  rep.cases = run_indexed_cases(
      1, n_max,
      [](int n) {
        std::vector<QFactor> fs;
        for (int k = 0; k < n; ++k)
          fs.push_back({LaurentPoly::monomial(1, n - 1 - k, k)});
        NCPoly product =
            ordered_product(fs, RelationConst::one(), Direction::ascending);
        NCPoly expansion(LaurentPoly::one());
        for (int k = 0; k <= n; ++k)
          expansion.add_term(
              n - k, k,
              qq_binomial(n, k).swap_bases() *
                  LaurentPoly::monomial(1, 1, 1).pow(t_exponent(n, k)));
        return compare_expansions("n=" + std::to_string(n), product,
                                  expansion);
      },
      opts.parallel);
  return rep;
}

inline Report verify_special_cases(int n_max, const VerifyOptions& opts = {}) {
  Report rep{"special-cases", {}};
  for (const Report& sub :
       {verify_special_case_gauss(n_max, opts),
        verify_special_case_noncommutative(n_max, opts),
        verify_special_case_symmetric(n_max, opts),
        verify_special_case_newton(n_max, opts),
        verify_special_case_golden(n_max, opts),
        verify_special_case_commutative(n_max, opts)}) {
    for (const auto& c : sub.cases) {
      CheckResult r = c;
      r.name = sub.suite + " " + r.name;
      rep.cases.push_back(std::move(r));
    }
  }
  return rep;
}

}  // namespace qqcalc
