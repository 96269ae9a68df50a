#pragma once

// JSON Lines and CSV encodings of reports. Integers that fit in 64 bits are
// written as JSON numbers, larger ones as decimal strings. Keys keep the
// declaration order of MonogenicityReport.

#include <ostream>
#include <string>
#include <variant>

#include "json.hpp"
#include "monogenic.hpp"
#include "search.hpp"
#include "trinomial.hpp"

namespace monoquartic {

using Json = nlohmann::ordered_json;

inline Json to_json(const Integer& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return v.str();
}

inline Json to_json(const Trinomial& t) { return Json{{"b", to_json(t.b)}, {"d", to_json(t.d)}}; }

inline Json to_json(const Signature& s) { return Json{{"r1", s.r1}, {"r2", s.r2}}; }

inline Json to_json(const Factorization& f) {
  Json factors = Json::array();
  for (const auto& pp : f.factors) factors.push_back(Json::array({to_json(pp.prime), pp.exponent}));
  return Json{{"sign", f.sign}, {"factors", std::move(factors)}};
}

inline Json to_json(const GfPoly& p) {
  Json c = Json::array();
  for (auto v : p.coeffs()) c.push_back(v);
  return c;
}

inline Json to_json(const PrimeVerdict& v) {
  Json j;
  j["prime"] = to_json(v.prime);
  j["evaluated"] = v.evaluated();
  j["divides_index"] = v.divides_index ? Json(*v.divides_index) : Json(nullptr);
  j["branch"] = branch_number(v.branch);
  j["disjunct"] = to_string(v.disjunct);
  if (const auto* mid = std::get_if<JksIntermediates>(&v.detail)) {
    Json m;
    m["qj"] = to_json(mid->qj);
    m["qe"] = to_json(mid->qe);
    for (auto [key, val] : {std::pair{"b1", &mid->b1}, std::pair{"b2", &mid->b2},
                            std::pair{"d1", &mid->d1}, std::pair{"d2", &mid->d2}})
      if (*val) m[key] = to_json(**val);
    j["intermediates"] = std::move(m);
  } else if (const auto* polys = std::get_if<ResidualPolys>(&v.detail)) {
    j["intermediates"] = Json{{"h1", to_json(polys->h1)}, {"h2", to_json(polys->h2)}};
  } else {
    j["intermediates"] = nullptr;
  }
  return j;
}

inline Json to_json(const MonogenicityReport& r) {
  Json j;
  j["trinomial"] = to_json(r.trinomial);
  j["irreducible"] = r.irreducible;
  j["c4"] = r.c4;
  j["disc"] = to_json(r.disc);
  j["disc_factored"] = r.disc_factored ? to_json(*r.disc_factored) : Json(nullptr);
  Json verdicts = Json::array();
  for (const auto& v : r.verdicts) verdicts.push_back(to_json(v));
  j["verdicts"] = std::move(verdicts);
  j["monogenic"] = r.monogenic;
  j["field_disc"] = r.field_disc ? to_json(*r.field_disc) : Json(nullptr);
  j["signature"] = r.signature ? to_json(*r.signature) : Json(nullptr);
  return j;
}

inline Json to_json(const SearchItem& item) {
  if (item.report) return to_json(*item.report);
  return Json{{"trinomial", to_json(item.trinomial)}, {"error", item.error}};
}

inline void write_jsonl(std::ostream& os, const SearchItem& item) { os << to_json(item).dump() << '\n'; }

inline constexpr const char* kCsvHeader = "b,d,irreducible,c4,disc,monogenic,r1,r2,failing_prime";

/// One CSV row; r1/r2/failing_prime are empty when not applicable.
inline std::string csv_row(const MonogenicityReport& r) {
  auto flag = [](bool v) { return v ? "true" : "false"; };
  std::string row = r.trinomial.b.str() + ',' + r.trinomial.d.str() + ',' + flag(r.irreducible) +
                    ',' + flag(r.c4) + ',' + r.disc.str() + ',' + flag(r.monogenic) + ',';
  if (r.signature) row += std::to_string(r.signature->r1) + ',' + std::to_string(r.signature->r2);
  else row += ',';
  row += ',';
  if (const auto* v = r.failing_verdict()) row += v->prime.str();
  return row;
}

}  // namespace monoquartic
