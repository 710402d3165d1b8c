#include "amdkit/report.hpp"

#include <cstdio>
#include <limits>

namespace amdkit {

Json rational_json(const Rational& r) {
  // counts stay far below 2^63 under the size cap; strings keep larger
  // user-supplied parameters exact
  Json j;
  if (r.num() <= BigInt(std::numeric_limits<std::int64_t>::max()))
    j["num"] = std::int64_t(r.num());
  else
    j["num"] = r.num().str();
  if (r.den() <= BigInt(std::numeric_limits<std::int64_t>::max()))
    j["den"] = std::int64_t(r.den());
  else
    j["den"] = r.den().str();
  return j;
}

Json profile_json(const AmdCode& code, const SuccessProfile& profile) {
  Json j;
  j["m"] = code.m;
  j["n"] = code.n;
  j["t"] = code.t;
  j["weakRho"] = profile.weak_computed ? rational_json(profile.weak_rho) : Json(nullptr);
  j["strongRho"] = profile.strong_computed ? rational_json(profile.strong_rho) : Json(nullptr);
  j["strongerRho"] =
      profile.stronger_computed ? rational_json(profile.stronger_rho) : Json(nullptr);
  if (profile.weak_computed) {
    j["argmaxDelta"] =
        Json::array({profile.weak_argmax.a1, profile.weak_argmax.a2, profile.weak_argmax.b});
  } else {
    j["argmaxDelta"] = nullptr;
  }
  if (profile.strong_computed) {
    Json per = Json::array();
    for (const Rational& r : profile.strong_rho_per_source) per.push_back(rational_json(r));
    j["perSource"] = std::move(per);
  } else {
    j["perSource"] = nullptr;
  }
  return j;
}

namespace {

Json check_json(const BoundCheck& c) {
  Json j;
  j["value"] = rational_json(c.value);
  j["bound"] = rational_json(c.bound);
  j["met"] = c.met;
  return j;
}

}  // namespace

Json bounds_json(const BoundReport& report) {
  Json j;
  j["weakLower"] = check_json(report.weak_lower);
  j["regularLower"] = check_json(report.regular_lower);
  Json per = Json::array();
  for (const BoundCheck& c : report.g_lower_per_source) per.push_back(check_json(c));
  j["gLowerPerSource"] = std::move(per);
  if (report.tag_window) {
    Json w;
    w["k"] = report.window_k;
    w["u"] = report.window_u;
    w["lowerBits"] = rational_json(report.tag_window->lower_bits);
    w["achievedRatio"] = rational_json(*report.tag_window->achieved_ratio);
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", *report.tag_window->achieved_bits);
    w["achievedBits"] = buf;
    w["nonempty"] = report.tag_window->window_nonempty;
    j["effectiveTagWindow"] = std::move(w);
  } else {
    j["effectiveTagWindow"] = nullptr;
  }
  j["rOptimal"] = report.r_optimal;
  j["gOptimal"] = report.g_optimal;
  return j;
}

Json derived_bound_json(const DerivedBoundCheck& weak, const StrongerBoundCheck& stronger) {
  Json j;
  j["lhs"] = rational_json(weak.lhs);
  j["rhs"] = rational_json(weak.rhs);
  j["holds"] = weak.holds;
  Json per = Json::array();
  for (const Rational& r : weak.per_source) per.push_back(rational_json(r));
  j["perSource"] = std::move(per);
  Json st;
  st["strongerRho"] = rational_json(stronger.stronger_rho);
  st["fENonlinearity"] = rational_json(stronger.fe_nonlinearity);
  st["holds"] = stronger.holds;
  j["stronger"] = std::move(st);
  return j;
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace amdkit
