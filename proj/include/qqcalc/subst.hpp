#pragma once

// Substitution homomorphisms out of Z[q^{+-1}, Q^{+-1}]: the symbolic
// degenerations (Q->1, q->1, Q->q, Q->1/q), exact rational evaluation,
// and the golden-ratio map (q -> 1-phi, Q -> phi) into Z[phi].

#include <string>
#include <variant>

#include "qqcalc/golden.hpp"
#include "qqcalc/laurent.hpp"

namespace qqcalc {

struct SubstTarget {
  enum class Tag {
    Q_to_one,
    q_to_one,
    Q_to_q,
    Q_to_inv_q,
    numeric,  // exact rational evaluation at (q0, Q0)
    golden,   // q -> 1-phi, Q -> phi
  };

  Tag tag = Tag::Q_to_one;
  Rational q0 = 0;
  Rational Q0 = 0;

  static SubstTarget Q_to_one() { return {Tag::Q_to_one}; }
  static SubstTarget q_to_one() { return {Tag::q_to_one}; }
  static SubstTarget Q_to_q() { return {Tag::Q_to_q}; }
  static SubstTarget Q_to_inv_q() { return {Tag::Q_to_inv_q}; }
  static SubstTarget numeric(Rational q0, Rational Q0) {
    return {Tag::numeric, std::move(q0), std::move(Q0)};
  }
  static SubstTarget golden() { return {Tag::golden}; }
};

using SubstResult = std::variant<LaurentPoly, Rational, GoldenNum>;

inline SubstResult lp_substitute(const LaurentPoly& p, const SubstTarget& t) {
  switch (t.tag) {
    case SubstTarget::Tag::Q_to_one:
      return substitute_monomials(p, LaurentPoly::q(), LaurentPoly::one());
    case SubstTarget::Tag::q_to_one:
      return substitute_monomials(p, LaurentPoly::one(), LaurentPoly::Q());
    case SubstTarget::Tag::Q_to_q:
      return substitute_monomials(p, LaurentPoly::q(), LaurentPoly::q());
    case SubstTarget::Tag::Q_to_inv_q:
      return substitute_monomials(p, LaurentPoly::q(), LaurentPoly::q(-1));
    case SubstTarget::Tag::numeric:
      return evaluate_rational(p, t.q0, t.Q0);
    case SubstTarget::Tag::golden:
      return evaluate_golden(p);
  }
  throw std::logic_error("unreachable substitution tag");
}

inline std::string to_string(const SubstResult& r) {
  if (const auto* p = std::get_if<LaurentPoly>(&r)) return p->to_string();
  if (const auto* x = std::get_if<Rational>(&r)) return x->str();
  return std::get<GoldenNum>(r).to_string();
}

}  // namespace qqcalc
