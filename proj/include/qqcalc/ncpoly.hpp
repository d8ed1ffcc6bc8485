#pragma once

// The noncommutative polynomial algebra C<x,y> / (yx - R*xy) over a
// commutative coefficient ring C, with R a fixed unit of C.
//
// Elements are kept in normal order (all powers of x left of all powers
// of y): moving one x through y^b produces the scalar R^b, so monomials
// multiply as (x^a y^b)(x^c y^d) = R^{bc} x^{a+c} y^{b+d} and the
// product extends bilinearly. The engine is templated on C because the
// same identities are checked over Z[q^{+-1},Q^{+-1}], over Z[phi] for
// the golden-ratio case, and over exact rationals for numeric spot
// checks.

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "qqcalc/errors.hpp"
#include "qqcalc/laurent.hpp"
#include "qqcalc/qcombinatorics.hpp"

namespace qqcalc {

template <class T>
T ring_one() {
  if constexpr (requires { T::one(); })
    return T::one();
  else
    return T(1);
}

template <class T>
bool ring_is_zero(const T& v) {
  if constexpr (requires { v.is_zero(); })
    return v.is_zero();
  else
    return v == T(0);
}

template <class T>
std::string coeff_string(const T& v) {
  if constexpr (requires { v.to_string(); })
    return v.to_string();
  else {
    std::ostringstream os;
    os << v;
    return os.str();
  }
}

struct XYDegree {
  int x = 0;
  int y = 0;
  friend bool operator==(const XYDegree&, const XYDegree&) = default;
};

// Stable output order: x-degree descending, then y-degree ascending.
struct XYDegreeOrder {
  bool operator()(const XYDegree& a, const XYDegree& b) const noexcept {
    if (a.x != b.x) return a.x > b.x;
    return a.y < b.y;
  }
};

enum class Direction { ascending, descending };

template <class Coeff>
class NCPolyT {
 public:
  using TermMap = std::map<XYDegree, Coeff, XYDegreeOrder>;

  explicit NCPolyT(Coeff relation) : relation_(std::move(relation)) {}

  static NCPolyT zero(Coeff relation) { return NCPolyT(std::move(relation)); }

  static NCPolyT unit(Coeff relation) {
    NCPolyT p(std::move(relation));
    p.add_term(0, 0, ring_one<Coeff>());
    return p;
  }

  // x + c*y
  static NCPolyT linear_factor(Coeff relation, const Coeff& c) {
    NCPolyT p(std::move(relation));
    p.add_term(1, 0, ring_one<Coeff>());
    p.add_term(0, 1, c);
    return p;
  }

  const Coeff& relation() const { return relation_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Coeff coeff(int x, int y) const {
    auto it = terms_.find({x, y});
    return it == terms_.end() ? Coeff{} : it->second;
  }

  void add_term(int x, int y, const Coeff& c) {
    if (ring_is_zero(c)) return;
    auto it = terms_.find({x, y});
    if (it == terms_.end()) {
      terms_.emplace(XYDegree{x, y}, c);
    } else {
      it->second = it->second + c;
      if (ring_is_zero(it->second)) terms_.erase(it);
    }
  }

  int total_degree() const {
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e.x + e.y);
    return d;
  }

  NCPolyT& operator+=(const NCPolyT& o) {
    require_same_relation(o);
    for (const auto& [e, c] : o.terms_) add_term(e.x, e.y, c);
    return *this;
  }

  friend NCPolyT operator+(NCPolyT a, const NCPolyT& b) {
    a += b;
    return a;
  }

  NCPolyT operator-() const {
    NCPolyT r(relation_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
  }

  friend NCPolyT operator-(const NCPolyT& a, const NCPolyT& b) {
    return a + (-b);
  }

  NCPolyT scaled(const Coeff& s) const {
    NCPolyT r(relation_);
    for (const auto& [e, c] : terms_) r.add_term(e.x, e.y, c * s);
    return r;
  }

  friend NCPolyT operator*(const NCPolyT& a, const NCPolyT& b) {
    a.require_same_relation(b);
    NCPolyT r(a.relation_);
    std::vector<Coeff> rel_pow{ring_one<Coeff>()};
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        const int p = ea.y * eb.x;  // x's of b crossing y's of a
        while (static_cast<int>(rel_pow.size()) <= p)
          rel_pow.push_back(rel_pow.back() * a.relation_);
        r.add_term(ea.x + eb.x, ea.y + eb.y, ca * cb * rel_pow[p]);
      }
    }
    return r;
  }

  NCPolyT& operator*=(const NCPolyT& o) { return *this = *this * o; }

  NCPolyT pow(int n) const {
    if (n < 0) throw std::invalid_argument("negative noncommutative power");
    NCPolyT r = unit(relation_);
    for (int i = 0; i < n; ++i) r *= *this;
    return r;
  }

  friend bool operator==(const NCPolyT& a, const NCPolyT& b) {
    return a.relation_ == b.relation_ && a.terms_ == b.terms_;
  }

 private:
  void require_same_relation(const NCPolyT& o) const {
    if (!(relation_ == o.relation_))
      throw RelationMismatch("combining polynomials over different relations");
  }

  Coeff relation_;
  TermMap terms_;
};

// A commutation constant: exactly one Laurent term with coefficient 1,
// e.g. Q, q^{-1}, 1 or q*Q^2, so that every integer power R^m exists.
class RelationConst {
 public:
  explicit RelationConst(const LaurentPoly& p) {
    if (p.num_terms() != 1 || p.terms().begin()->second != 1)
      throw std::invalid_argument(
          "relation constant must be a single monomial with coefficient 1");
    exps_ = p.terms().begin()->first;
  }

  static RelationConst Q() { return RelationConst(LaurentPoly::Q()); }
  static RelationConst q() { return RelationConst(LaurentPoly::q()); }
  static RelationConst inv_q() { return RelationConst(LaurentPoly::q(-1)); }
  static RelationConst one() { return RelationConst(LaurentPoly::one()); }

  LaurentPoly as_poly() const {
    return LaurentPoly::monomial(1, exps_.eq, exps_.eQ);
  }

  LaurentPoly pow(int m) const {
    return LaurentPoly::monomial(1, exps_.eq * m, exps_.eQ * m);
  }

  friend bool operator==(const RelationConst&, const RelationConst&) = default;

 private:
  ExponentPair exps_;
};

using NCPoly = NCPolyT<LaurentPoly>;

// One factor (x + c*y) of an ordered product.
struct QFactor {
  LaurentPoly c;
};

// Scalar produced by moving one x through y^b: R^b.
inline LaurentPoly normal_order_step(int b, const RelationConst& rel) {
  return rel.pow(b);
}

template <class Coeff>
NCPolyT<Coeff> ordered_product_over(const std::vector<Coeff>& factors,
                                    Coeff relation, Direction dir) {
  NCPolyT<Coeff> p = NCPolyT<Coeff>::unit(std::move(relation));
  if (dir == Direction::ascending) {
    for (const auto& c : factors)
      p *= NCPolyT<Coeff>::linear_factor(p.relation(), c);
  } else {
    for (auto it = factors.rbegin(); it != factors.rend(); ++it)
      p *= NCPolyT<Coeff>::linear_factor(p.relation(), *it);
  }
  return p;
}

inline NCPoly ordered_product(const std::vector<QFactor>& factors,
                              const RelationConst& rel, Direction dir) {
  std::vector<LaurentPoly> cs;
  cs.reserve(factors.size());
  for (const auto& f : factors) cs.push_back(f.c);
  return ordered_product_over(cs, rel.as_poly(), dir);
}

// (x+y)(x+qy)(x+q^2 y)...(x+q^{n-1} y)
inline NCPoly binomial_lt(int n, const RelationConst& rel) {
  std::vector<QFactor> fs;
  fs.reserve(n);
  for (int k = 0; k < n; ++k) fs.push_back({LaurentPoly::q(k)});
  return ordered_product(fs, rel, Direction::ascending);
}

// (x+q^{n-1} y)...(x+qy)(x+y)
inline NCPoly binomial_gt(int n, const RelationConst& rel) {
  std::vector<QFactor> fs;
  fs.reserve(n);
  for (int k = 0; k < n; ++k) fs.push_back({LaurentPoly::q(k)});
  return ordered_product(fs, rel, Direction::descending);
}

// Closed form of the ascending expansion at R = Q:
// sum_k [n k]_{Q,q} q^{k(k-1)/2} x^{n-k} y^k, built from the recurrence
// coefficients with no factor multiplication.
inline NCPoly theorem_expansion(int n) {
  NCPoly p(LaurentPoly::Q());
  for (int k = 0; k <= n; ++k)
    p.add_term(n - k, k,
               qq_binomial(n, k) * LaurentPoly::q(t_exponent(n, k)));
  return p;
}

// Applies f to every coefficient, rebasing the result on a new relation
// (coefficient maps usually change the commutation constant too).
template <class NewCoeff, class Coeff, class F>
NCPolyT<NewCoeff> transform_coefficients(const NCPolyT<Coeff>& p,
                                         NewCoeff new_relation, F&& f) {
  NCPolyT<NewCoeff> r(std::move(new_relation));
  for (const auto& [e, c] : p.terms()) r.add_term(e.x, e.y, f(c));
  return r;
}

inline std::string to_string(const NCPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    if (!first) os << " + ";
    first = false;
    std::string vars;
    if (e.x > 0) {
      vars = "x";
      if (e.x > 1) vars += "^" + std::to_string(e.x);
    }
    if (e.y > 0) {
      if (!vars.empty()) vars += "*";
      vars += "y";
      if (e.y > 1) vars += "^" + std::to_string(e.y);
    }
    if (vars.empty()) {
      os << (c.num_terms() > 1 ? "(" + c.to_string() + ")" : c.to_string());
      continue;
    }
    if (c.is_one()) {
      os << vars;
    } else if (c.num_terms() == 1 && c.terms().begin()->second > 0) {
      os << c.to_string() << '*' << vars;
    } else {
      os << '(' << c.to_string() << ")*" << vars;
    }
  }
  return os.str();
}

}  // namespace qqcalc
