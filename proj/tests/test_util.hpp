#pragma once

// Shared generators for the property-style tests. Seeds are fixed so
// failures reproduce.

#include <random>

#include "qqcalc/golden.hpp"
#include "qqcalc/laurent.hpp"
#include "qqcalc/ncpoly.hpp"

namespace qqtest {

using qqcalc::BigInt;
using qqcalc::GoldenNum;
using qqcalc::LaurentPoly;
using qqcalc::NCPoly;

inline std::mt19937 make_rng(unsigned seed) { return std::mt19937(seed); }

inline LaurentPoly random_laurent(std::mt19937& rng, int max_terms = 4,
                                  int exp_range = 3, int coeff_range = 9,
                                  bool allow_negative_exponents = true) {
  std::uniform_int_distribution<int> n_terms(0, max_terms);
  std::uniform_int_distribution<int> exp(
      allow_negative_exponents ? -exp_range : 0, exp_range);
  std::uniform_int_distribution<int> coeff(-coeff_range, coeff_range);
  LaurentPoly p;
  int terms = n_terms(rng);
  for (int i = 0; i < terms; ++i)
    p.add_term({exp(rng), exp(rng)}, coeff(rng));
  return p;
}

inline GoldenNum random_golden(std::mt19937& rng, int range = 20) {
  std::uniform_int_distribution<int> d(-range, range);
  return GoldenNum(d(rng), d(rng));
}

inline NCPoly random_ncpoly(std::mt19937& rng, const LaurentPoly& relation,
                            int max_terms = 3, int max_degree = 3) {
  std::uniform_int_distribution<int> n_terms(0, max_terms);
  std::uniform_int_distribution<int> deg(0, max_degree);
  NCPoly p(relation);
  int terms = n_terms(rng);
  for (int i = 0; i < terms; ++i)
    p.add_term(deg(rng), deg(rng), random_laurent(rng, 2, 2, 5));
  return p;
}

}  // namespace qqtest
