#include "core/serialize.hpp"

#include "core/error.hpp"

namespace cohomlen {

namespace {

const json& member(const json& j, const char* key) {
  if (!j.is_object()) fail(ErrorKind::usage, std::string("expected an object holding '") + key + "'");
  auto it = j.find(key);
  if (it == j.end()) fail(ErrorKind::usage, std::string("missing field '") + key + "'");
  return *it;
}

std::vector<std::int64_t> int_vector(const json& j, const char* what) {
  if (!j.is_array()) fail(ErrorKind::usage, std::string(what) + " must be an array of integers");
  std::vector<std::int64_t> out;
  out.reserve(j.size());
  for (const auto& x : j) {
    if (!x.is_number_integer()) fail(ErrorKind::usage, std::string(what) + " must contain integers only");
    out.push_back(x.get<std::int64_t>());
  }
  return out;
}

void check_space_group(const GroupSpec& group, const json& j) {
  if (!j.contains("group")) return;
  if (group_from_json(j.at("group")) != group) {
    fail(ErrorKind::hypothesis, "space group " + group_from_json(j.at("group")).to_string() +
                                    " differs from document group " + group.to_string());
  }
}

}  // namespace

std::int64_t json_int(const json& j, const char* key) {
  const json& v = member(j, key);
  if (!v.is_number_integer()) fail(ErrorKind::usage, std::string("field '") + key + "' must be an integer");
  return v.get<std::int64_t>();
}

GroupSpec group_from_json(const json& j) {
  const auto p = json_int(j, "p");
  const auto rank = json_int(j, "rank");
  if (rank < 1) fail(ErrorKind::domain, "group rank must be at least 1");
  return GroupSpec(p, static_cast<std::size_t>(rank));
}

RepSphere rep_sphere_from_json(const GroupSpec& group, const json& j) {
  check_space_group(group, j);
  const json& ws = member(j, "weights");
  if (!ws.is_array()) fail(ErrorKind::usage, "'weights' must be an array of integer arrays");
  std::vector<Weight> weights;
  for (const auto& w : ws) weights.emplace_back(group, int_vector(w, "weight"));
  return RepSphere(group, std::move(weights));
}

CohomSphereData cohom_sphere_from_json(const GroupSpec& group, const json& j) {
  check_space_group(group, j);
  CohomSphereData d{group, json_int(j, "n"), json_int(j, "r"), {}};
  if (j.contains("fixed")) {
    const json& fixed = j.at("fixed");
    if (!fixed.is_array()) fail(ErrorKind::usage, "'fixed' must be an array of {line, dim} objects");
    for (const auto& e : fixed) {
      d.fixed.push_back({int_vector(member(e, "line"), "line"), json_int(e, "dim")});
    }
  }
  return d;
}

json to_json(const GroupSpec& g) { return {{"p", g.p()}, {"rank", g.rank()}}; }

json to_json(const SubtorusLine& line) { return line.direction(); }

json to_json(const Weight& w) { return w.components(); }

json to_json(const RepSphere& s) {
  json weights = json::array();
  for (const auto& w : s.weights()) weights.push_back(to_json(w));
  return {{"type", "rep_sphere"}, {"group", to_json(s.group())}, {"weights", weights}};
}

json to_json(const CohomSphereData& d) {
  json fixed = json::array();
  for (const auto& e : d.fixed) fixed.push_back({{"line", e.line}, {"dim", e.dim}});
  return {{"type", "cohom_sphere"}, {"group", to_json(d.group)}, {"n", d.n}, {"r", d.r}, {"fixed", fixed}};
}

json to_json(const Violation& v) { return {{"code", v.code}, {"message", v.message}}; }

json to_json(const LengthResult& r) {
  return {{"kind", r.kind == LengthKind::exact ? "exact" : "interval"},
          {"lo", r.lo},
          {"hi", r.hi},
          {"basis", std::string(basis_tag(r.basis))}};
}

json to_json(const EulerClass& e) {
  json factors = json::array();
  for (const auto& [line, mult] : e.factors) factors.push_back({{"line", to_json(line)}, {"mult", mult}});
  return {{"factors", factors},
          {"polynomial", e.polynomial.to_string()},
          {"degree", e.cohomological_degree}};
}

json to_json(const MapVerdict& v) {
  json witnesses = json::array();
  for (const auto& w : v.witnesses) witnesses.push_back(to_json(w));
  return {{"exists", std::string(existence_tag(v.exists))},
          {"witnesses", witnesses},
          {"rationale", v.rationale},
          {"assumptions", v.assumptions},
          {"dimension_obstruction", v.dimension_obstruction}};
}

std::string rational_text(const Rational& q) {
  return boost::multiprecision::numerator(q).str() + "/" + boost::multiprecision::denominator(q).str();
}

json to_json(const BourginYangBound& b) {
  return {{"bound_exact", rational_text(b.bound)}, {"bound_int", b.bound_int}, {"nonempty", b.nonempty}};
}

json to_json(const RefinedBourginYang& r) {
  json per_line = json::array();
  for (const auto& [line, value] : r.per_line) per_line.push_back({{"line", to_json(line)}, {"bound", value}});
  return {{"total", r.total}, {"per_line", per_line}};
}

json to_json(const OracleReport& r) {
  json witness = json::array();
  for (const auto& w : r.witness) witness.push_back(to_json(w));
  return {{"lambda", r.lambda},
          {"witness", witness},
          {"formula_value", r.formula_value},
          {"agrees", r.agrees},
          {"search_bound", r.search_bound},
          {"candidates_examined", r.candidates_examined}};
}

}  // namespace cohomlen
