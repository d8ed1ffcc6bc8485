#pragma once

// Two-base combinatorics: (Q,q)-numbers, factorials, binomial
// coefficients and their mirror Pascal recurrences, plus the exponent
// function t(n,k) and Pascal-triangle row generation.
//
// Binomial coefficients are built division-free from the recurrence
//   [n k] = q^k [n-1 k] + Q^{n-k} [n-1 k-1]
// with rows cached; the factorial product never has to be divided.

#include <mutex>
#include <vector>

#include "qqcalc/laurent.hpp"

namespace qqcalc {

// [n]_{Q,q} = Q^{n-1} + Q^{n-2} q + ... + q^{n-1}; [0] = 0, [1] = 1.
inline LaurentPoly qq_number(int n) {
  LaurentPoly sum;
  for (int i = 0; i < n; ++i)
    sum += LaurentPoly::monomial(1, i, n - 1 - i);
  return sum;
}

// [n]! = [1] [2] ... [n]; empty product is 1.
inline LaurentPoly qq_factorial(int n) {
  LaurentPoly prod = LaurentPoly::one();
  for (int i = 1; i <= n; ++i) prod *= qq_number(i);
  return prod;
}

namespace detail {

// Rows of the (Q,q)-Pascal triangle, grown on demand. Concurrent
// callers must observe the same results as sequential execution, so the
// table is grown under a lock and entries are returned by value.
inline const LaurentPoly& binomial_row_entry_locked(
    std::vector<std::vector<LaurentPoly>>& rows, int n, int k) {
  while (static_cast<int>(rows.size()) <= n) {
    int m = static_cast<int>(rows.size());
    std::vector<LaurentPoly> row(m + 1);
    row[0] = LaurentPoly::one();
    row[m] = LaurentPoly::one();
    for (int j = 1; j < m; ++j)
      row[j] = LaurentPoly::q(j) * rows[m - 1][j] +
               LaurentPoly::Q(m - j) * rows[m - 1][j - 1];
    rows.push_back(std::move(row));
  }
  return rows[n][k];
}

}  // namespace detail

// [n k]_{Q,q}; zero outside 0 <= k <= n. Always a genuine polynomial:
// no negative exponents, no fractions.
inline LaurentPoly qq_binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) return LaurentPoly::zero();
  static std::mutex mutex;
  static std::vector<std::vector<LaurentPoly>> rows{{LaurentPoly::one()}};
  std::scoped_lock lock(mutex);
  return detail::binomial_row_entry_locked(rows, n, k);
}

// [n k] = q^k [n-1 k] + Q^{n-k} [n-1 k-1]
inline bool pascal_check_1(int n, int k) {
  return qq_binomial(n, k) == LaurentPoly::q(k) * qq_binomial(n - 1, k) +
                                  LaurentPoly::Q(n - k) * qq_binomial(n - 1, k - 1);
}

// [n k] = Q^k [n-1 k] + q^{n-k} [n-1 k-1]
inline bool pascal_check_2(int n, int k) {
  return qq_binomial(n, k) == LaurentPoly::Q(k) * qq_binomial(n - 1, k) +
                                  LaurentPoly::q(n - k) * qq_binomial(n - 1, k - 1);
}

// Solution of the difference system t(n+1,k) = t(n,k),
// t(n,k) = t(n,k-1) + k - 1 with t(0,0) = t(1,0) = t(1,1) = 0.
// Independent of n; the parameter is kept for traceability.
inline int t_exponent([[maybe_unused]] int n, int k) {
  return k * (k - 1) / 2;
}

// Brace coefficients built directly from the three-branch recursion:
// row 0 is {1}; then {n+1 0} = {n 0}, {n+1 n+1} = q^n {n n}, and the
// interior entries are Q^k {n k} + q^n {n k-1}.
inline std::vector<std::vector<LaurentPoly>> brace_rows(int n_max) {
  std::vector<std::vector<LaurentPoly>> rows{{LaurentPoly::one()}};
  for (int n = 0; n < n_max; ++n) {
    const auto& prev = rows[n];
    std::vector<LaurentPoly> row(n + 2);
    row[0] = prev[0];
    row[n + 1] = LaurentPoly::q(n) * prev[n];
    for (int k = 1; k <= n; ++k)
      row[k] = LaurentPoly::Q(k) * prev[k] + LaurentPoly::q(n) * prev[k - 1];
    rows.push_back(std::move(row));
  }
  return rows;
}

// Confirms {n k} = q^{t(n,k)} [n k]_{Q,q} for all 0 <= k <= n <= n_max,
// i.e. that t(n,k) = k(k-1)/2 solves the recursion system.
inline bool recursion_solver_check(int n_max) {
  auto rows = brace_rows(n_max);
  for (int n = 0; n <= n_max; ++n)
    for (int k = 0; k <= n; ++k)
      if (rows[n][k] != LaurentPoly::q(t_exponent(n, k)) * qq_binomial(n, k))
        return false;
  return true;
}

// Row n of the triangle actually appearing in the expansion:
// q^{t(n,k)} [n k]_{Q,q} for k = 0..n.
inline std::vector<std::vector<LaurentPoly>> triangle_rows(int n_max) {
  std::vector<std::vector<LaurentPoly>> rows;
  for (int n = 0; n <= n_max; ++n) {
    std::vector<LaurentPoly> row;
    row.reserve(n + 1);
    for (int k = 0; k <= n; ++k)
      row.push_back(LaurentPoly::q(t_exponent(n, k)) * qq_binomial(n, k));
    rows.push_back(std::move(row));
  }
  return rows;
}

// Single-base Gaussian binomial in q, by the classical Pascal rule
// C_q(n,k) = C_q(n-1,k-1) + q^k C_q(n-1,k). Kept independent of the
// two-base recurrence so the specializations can be cross-checked.
inline LaurentPoly gaussian_binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) return LaurentPoly::zero();
  std::vector<LaurentPoly> row{LaurentPoly::one()};
  for (int m = 1; m <= n; ++m) {
    std::vector<LaurentPoly> next(m + 1);
    next[0] = LaurentPoly::one();
    next[m] = LaurentPoly::one();
    for (int j = 1; j < m; ++j)
      next[j] = row[j - 1] + LaurentPoly::q(j) * row[j];
    row = std::move(next);
  }
  return row[k];
}

// Symmetric q-binomial, built from symmetric q-numbers
// [m] = q^{m-1} + q^{m-3} + ... + q^{-(m-1)} through the mirrored
// Pascal rule [n k] = q^k [n-1 k] + q^{-(n-k)} [n-1 k-1].
inline LaurentPoly symmetric_binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) return LaurentPoly::zero();
  std::vector<LaurentPoly> row{LaurentPoly::one()};
  for (int m = 1; m <= n; ++m) {
    std::vector<LaurentPoly> next(m + 1);
    next[0] = LaurentPoly::one();
    next[m] = LaurentPoly::one();
    for (int j = 1; j < m; ++j)
      next[j] = LaurentPoly::q(j) * row[j] +
                LaurentPoly::q(-(m - j)) * row[j - 1];
    row = std::move(next);
  }
  return row[k];
}

inline BigInt integer_binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  BigInt r = 1;
  for (int i = 0; i < k; ++i) {
    r *= n - i;
    r /= i + 1;  // exact at every step
  }
  return r;
}

}  // namespace qqcalc
