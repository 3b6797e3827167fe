#include "core/theorems.hpp"

#include <algorithm>
#include <set>

#include "core/error.hpp"

namespace cohomlen {

namespace {

void require_same_group(const GroupSpec& a, const GroupSpec& b) {
  if (a != b) {
    fail(ErrorKind::hypothesis, "spaces live over different groups: " + a.to_string() + " vs " +
                                    b.to_string());
  }
}

void require_prime(const GroupSpec& g, const char* what) {
  if (g.is_torus()) {
    fail(ErrorKind::unsupported, std::string(what) + " is only available for p-tori (Z_p)^k");
  }
}

Integer ceil_div(const Integer& num, const Integer& den) {
  // den > 0
  Integer q = num / den;
  if (num % den != 0 && num > 0) ++q;
  return q;
}

}  // namespace

std::string_view existence_tag(Existence e) noexcept {
  switch (e) {
    case Existence::yes: return "true";
    case Existence::no: return "false";
    case Existence::unknown: return "unknown";
  }
  return "unknown";
}

MapVerdict borsuk_ulam_check(const CohomSphereData& x, const CohomSphereData& y) {
  require_same_group(x.group, y.group);
  require_valid(x);
  require_valid(y);
  require_free_of_fixed_points(x, "the Borsuk-Ulam check (source)");
  require_free_of_fixed_points(y, "the Borsuk-Ulam check (target)");

  std::set<SubtorusLine> lines;
  for (const auto& [line, dim] : x.table()) lines.insert(line);
  for (const auto& [line, dim] : y.table()) lines.insert(line);

  MapVerdict v{Existence::unknown, {}, {}, {}, x.n > y.n};
  for (const auto& line : lines) {
    if (x.dim_at(line) > y.dim_at(line)) v.witnesses.push_back(line);
  }
  if (!v.witnesses.empty()) {
    v.exists = Existence::no;
    v.rationale = "obstruction: dim X^H > dim Y^H on a corank-1 subtorus, so no equivariant map exists";
  } else {
    v.rationale = "no obstruction: dim X^H <= dim Y^H on every corank-1 subtorus (necessary condition only)";
  }
  return v;
}

MapVerdict map_exists_to_rep_sphere(const CohomSphereData& x, const RepSphere& v) {
  require_prime(x.group, "the existence criterion");
  require_same_group(x.group, v.group());
  require_valid(x);
  require_free_of_fixed_points(x, "the existence criterion");

  MapVerdict out{Existence::yes, {}, {}, {"source is a G-ANR"}, x.n > sphere_dim(v)};
  for (const auto& [line, dim] : x.table()) {
    if (fixed_dim(v, line) < dim) out.witnesses.push_back(line);
  }
  if (out.witnesses.empty()) {
    out.rationale = "dim X^H <= dim S(V)^H on every corank-1 subtorus with X^H nonempty; "
                    "for a G-ANR source this is equivalent to existence";
  } else {
    out.exists = Existence::no;
    out.rationale = "dim X^H > dim S(V)^H on a corank-1 subtorus, so no equivariant map exists";
  }
  return out;
}

RepSphere canonical_target(const CohomSphereData& x) {
  require_prime(x.group, "the canonical target");
  require_valid(x);
  require_free_of_fixed_points(x, "the canonical target");
  std::vector<Weight> weights;
  for (const auto& [line, dim] : x.table()) {
    const std::int64_t summands = dim + 1;
    std::int64_t copies = summands;
    if (x.group.p() != 2) {
      if (summands % 2 != 0) fail(ErrorKind::internal, "odd fixed-set dimension count on " + line.to_string());
      copies = summands / 2;
    }
    for (std::int64_t i = 0; i < copies; ++i) weights.emplace_back(x.group, line.direction());
  }
  if (weights.empty()) {
    fail(ErrorKind::domain, "the empty sphere (n = -1) has no representation-sphere target");
  }
  return RepSphere(x.group, std::move(weights));
}

BourginYangBound bourgin_yang_bound(const BourginYangQuery& q) {
  static_cast<void>(Field(q.p));
  if (q.alpha < 1) fail(ErrorKind::domain, "alpha must be at least 1, got " + std::to_string(q.alpha));
  if (q.n < -1 || q.m < -1) fail(ErrorKind::domain, "sphere dimensions must be >= -1");
  const Integer den = q.p == 2 ? Integer(q.alpha) : Integer(2 * q.alpha);
  const Integer num = Integer(q.n - q.m) - den;  // (n - m)/den - 1
  const Rational bound(num, den);
  const Integer ceil = ceil_div(num, den);
  return {bound, static_cast<std::int64_t>(ceil), q.n > q.m};
}

std::int64_t bourgin_yang_manifold(std::int64_t n, std::int64_t m) {
  if (n < 0 || m < 0) fail(ErrorKind::domain, "manifold dimensions must be nonnegative");
  return n - m - 1;
}

RefinedBourginYang refined_bourgin_yang(const CohomSphereData& x, const CohomSphereData& y) {
  require_same_group(x.group, y.group);
  require_valid(x);
  require_valid(y);
  require_free_of_fixed_points(x, "the refined Bourgin-Yang bound (source)");
  require_free_of_fixed_points(y, "the refined Bourgin-Yang bound (target)");
  RefinedBourginYang out{0, {}};
  for (const auto& [line, dim] : x.table()) {
    const auto diff = std::max<std::int64_t>(0, length_H(x, line).lo - length_H(y, line).lo);
    out.per_line.emplace_back(line, diff);
    out.total += diff;
  }
  return out;
}

}  // namespace cohomlen
