#pragma once

#include <json.hpp>

#include "hpade/poly_format.hpp"
#include "hpade/siegel.hpp"
#include "hpade/wild.hpp"

namespace hpade {

using OrderedJson = nlohmann::ordered_json;

// Frozen report schema; bump `schema` when a field changes meaning.
inline constexpr int kReportSchema = 1;

inline OrderedJson to_json(const GcdReport& r) {
  OrderedJson j;
  j["schema"] = kReportSchema;
  j["gcd"] = to_string(r.gcd);
  OrderedJson quotients = OrderedJson::array();
  for (const IntPoly& q : r.quotients) quotients.push_back(to_string(q));
  j["quotients"] = quotients;
  j["claimed_factor"] = to_string(r.claimed_factor);
  j["convention"] = to_string(r.convention);
  j["divisibility_ok"] = r.divisibility_ok;
  return j;
}

inline OrderedJson to_json(const IntGcdReport& r) {
  OrderedJson j;
  j["schema"] = kReportSchema;
  j["gcd"] = r.gcd.get_str();
  OrderedJson quotients = OrderedJson::array();
  for (const Int& q : r.quotients) quotients.push_back(q.get_str());
  j["quotients"] = quotients;
  j["claimed_factor"] = r.claimed_factor.get_str();
  j["convention"] = to_string(r.convention);
  j["divisibility_ok"] = r.divisibility_ok;
  return j;
}

inline OrderedJson to_json(const SiegelReport& r) {
  OrderedJson j;
  j["schema"] = kReportSchema;
  j["mahler_bound"] = r.mahler.get_str();
  j["fg_bound"] = r.fg.bound.decimal();
  j["fg_bound_radicand"] = rat_to_string(r.fg.bound.radicand());
  j["fg_bound_root"] = r.fg.bound.root();
  if (r.rank_ok) {
    j["bv_bound"] = r.bv.decimal();
    j["bv_bound_radicand"] = rat_to_string(r.bv.radicand());
    j["bv_bound_root"] = r.bv.root();
  } else {
    j["bv_bound"] = nullptr;
  }
  j["f"] = rat_to_string(r.fg.f);
  j["g"] = rat_to_string(r.fg.g);
  j["D"] = r.rank_ok ? OrderedJson(r.bv_divisor.get_str()) : OrderedJson(nullptr);
  OrderedJson sol = OrderedJson::array();
  for (const Int& c : r.solution) sol.push_back(c.get_str());
  j["solution"] = sol;
  j["norm"] = r.norm.get_str();
  j["rank_ok"] = r.rank_ok;
  return j;
}

}  // namespace hpade
