#pragma once

#include <json.hpp>

#include "amdkit/amd.hpp"
#include "amdkit/bounds.hpp"
#include "amdkit/derive.hpp"

namespace amdkit {

using Json = nlohmann::ordered_json;

Json rational_json(const Rational& r);

// {m, n, t, weakRho, strongRho, strongerRho, argmaxDelta, perSource};
// uncomputed models appear as null. Field names are fixed for consumers.
Json profile_json(const AmdCode& code, const SuccessProfile& profile);

// {value, bound, met} triples plus the rOptimal / gOptimal verdicts,
// embedded by callers under a "bounds" key.
Json bounds_json(const BoundReport& report);

Json derived_bound_json(const DerivedBoundCheck& weak, const StrongerBoundCheck& stronger);

// canonical serialization: two-space indent, trailing newline
std::string dump_json(const Json& j);

}  // namespace amdkit
