#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "core/oracle.hpp"
#include "core/theorems.hpp"

namespace cohomlen {

using json = nlohmann::json;

// Parsing. Shape errors (wrong JSON types, missing keys) are usage errors;
// mathematically invalid values surface as the core's own error kinds.
GroupSpec group_from_json(const json& j);
RepSphere rep_sphere_from_json(const GroupSpec& group, const json& j);
CohomSphereData cohom_sphere_from_json(const GroupSpec& group, const json& j);

std::int64_t json_int(const json& j, const char* key);

json to_json(const GroupSpec& g);
json to_json(const SubtorusLine& line);
json to_json(const Weight& w);
json to_json(const RepSphere& s);
json to_json(const CohomSphereData& d);
json to_json(const Violation& v);
json to_json(const LengthResult& r);
json to_json(const EulerClass& e);
json to_json(const MapVerdict& v);
json to_json(const BourginYangBound& b);
json to_json(const RefinedBourginYang& r);
json to_json(const OracleReport& r);

// "num/den" with den >= 1.
std::string rational_text(const Rational& q);

}  // namespace cohomlen
