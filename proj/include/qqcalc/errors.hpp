#pragma once

#include <stdexcept>
#include <string>

namespace qqcalc {

// Raised when an inverse is requested of an element that is not a unit
// of its ring (e.g. a multi-term Laurent polynomial, or a golden-ring
// element of norm other than +-1).
struct NonUnitInverse : std::domain_error {
  explicit NonUnitInverse(const std::string& what) : std::domain_error(what) {}
};

// Raised when a negative exponent must be evaluated at base zero.
struct ZeroBase : std::domain_error {
  explicit ZeroBase(const std::string& what) : std::domain_error(what) {}
};

// Raised when two noncommutative polynomials built over different
// commutation relations are combined.
struct RelationMismatch : std::invalid_argument {
  explicit RelationMismatch(const std::string& what)
      : std::invalid_argument(what) {}
};

}  // namespace qqcalc
