#pragma once

// JSON forms of the core value types. Big integers are carried as
// decimal strings so 64-bit consumers never overflow; term arrays are
// emitted in the canonical orders the types already maintain.
//
//   LaurentPoly  {"terms":[{"q":int,"Q":int,"c":"decimal"},...]}
//   GoldenNum    {"a":"decimal","b":"decimal"}
//   NCPoly       {"relation":<LaurentPoly>,"terms":[{"x":int,"y":int,
//                 "coeff":<LaurentPoly>},...]}
//   Frac         {"num":<LaurentPoly>,"den":<LaurentPoly>}

#include <json.hpp>

#include "qqcalc/golden.hpp"
#include "qqcalc/laurent.hpp"
#include "qqcalc/ncpoly.hpp"
#include "qqcalc/qexp.hpp"
#include "qqcalc/report.hpp"

namespace qqcalc {

using nlohmann::json;

inline json to_json(const LaurentPoly& p) {
  json terms = json::array();
  for (const auto& [e, c] : p.terms())
    terms.push_back({{"q", e.eq}, {"Q", e.eQ}, {"c", c.str()}});
  return {{"terms", std::move(terms)}};
}

inline LaurentPoly laurent_from_json(const json& j) {
  LaurentPoly p;
  for (const auto& t : j.at("terms"))
    p.add_term({t.at("q").get<int>(), t.at("Q").get<int>()},
               BigInt(t.at("c").get<std::string>()));
  return p;
}

inline json to_json(const GoldenNum& g) {
  return {{"a", g.a().str()}, {"b", g.b().str()}};
}

inline GoldenNum golden_from_json(const json& j) {
  return {BigInt(j.at("a").get<std::string>()),
          BigInt(j.at("b").get<std::string>())};
}

inline json to_json(const NCPoly& p) {
  json terms = json::array();
  for (const auto& [e, c] : p.terms())
    terms.push_back({{"x", e.x}, {"y", e.y}, {"coeff", to_json(c)}});
  return {{"relation", to_json(p.relation())}, {"terms", std::move(terms)}};
}

inline NCPoly ncpoly_from_json(const json& j) {
  NCPoly p(laurent_from_json(j.at("relation")));
  for (const auto& t : j.at("terms"))
    p.add_term(t.at("x").get<int>(), t.at("y").get<int>(),
               laurent_from_json(t.at("coeff")));
  return p;
}

inline json to_json(const Frac& f) {
  return {{"num", to_json(f.num())}, {"den", to_json(f.den())}};
}

inline Frac frac_from_json(const json& j) {
  return {laurent_from_json(j.at("num")), laurent_from_json(j.at("den"))};
}

inline json to_json(const TruncSeries& s) {
  json terms = json::array();
  for (const auto& [e, c] : s.terms())
    terms.push_back({{"x", e.x}, {"y", e.y}, {"coeff", to_json(c)}});
  return {{"order", s.order()},
          {"relation", to_json(s.relation().as_poly())},
          {"terms", std::move(terms)}};
}

inline json triangle_to_json(const std::vector<std::vector<LaurentPoly>>& rows) {
  json out = json::array();
  for (const auto& row : rows) {
    json r = json::array();
    for (const auto& entry : row) r.push_back(to_json(entry));
    out.push_back(std::move(r));
  }
  return out;
}

inline json to_json(const Report& rep) {
  json cases = json::array();
  for (const auto& c : rep.cases) {
    json e = {{"name", c.name}, {"passed", c.passed}};
    if (!c.detail.empty()) e["detail"] = c.detail;
    cases.push_back(std::move(e));
  }
  return {{"suite", rep.suite},
          {"cases", std::move(cases)},
          {"passed", rep.all_passed()}};
}

}  // namespace qqcalc
