#include "core/spheres.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "core/error.hpp"

namespace cohomlen {

namespace {

std::string describe(const std::vector<std::int64_t>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(v[i]);
  }
  return out + ")";
}

// Dimension of a sphere built from c irreducible summands.
std::int64_t dim_from_count(const GroupSpec& g, std::int64_t c) {
  return g.p() == 2 ? c - 1 : 2 * c - 1;
}

}  // namespace

RepSphere::RepSphere(GroupSpec group, std::vector<Weight> weights)
    : group_(std::move(group)), weights_(std::move(weights)) {
  if (weights_.empty()) fail(ErrorKind::domain, "representation sphere needs at least one weight");
  for (const auto& w : weights_) {
    if (w.components().size() != group_.rank()) {
      fail(ErrorKind::structural, "weight " + describe(w.components()) + " has the wrong rank");
    }
    if (w.is_zero()) {
      fail(ErrorKind::domain, "zero weight: trivial summands (V^G != 0) are not supported");
    }
  }
}

std::int64_t CohomSphereData::dim_at(const SubtorusLine& line) const {
  for (const auto& e : fixed) {
    if (e.line == line.direction()) return e.dim;
  }
  return r;
}

std::vector<std::pair<SubtorusLine, std::int64_t>> CohomSphereData::table() const {
  std::vector<std::pair<SubtorusLine, std::int64_t>> out;
  out.reserve(fixed.size());
  for (const auto& e : fixed) out.emplace_back(SubtorusLine::of(group, e.line), e.dim);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

std::int64_t sphere_dim(const RepSphere& s) {
  return dim_from_count(s.group(), static_cast<std::int64_t>(s.weights().size()));
}

std::int64_t fixed_dim(const RepSphere& s, const SubtorusLine& line) {
  const auto c = std::count_if(s.weights().begin(), s.weights().end(),
                               [&](const Weight& w) { return vanishes_on(s.group(), w, line); });
  return dim_from_count(s.group(), c);
}

CohomSphereData to_cohom_data(const RepSphere& s) {
  // Every weight lies on exactly one line, so per-line counts partition the
  // weights and the Borel formula holds by construction.
  std::map<SubtorusLine, std::int64_t> counts;
  for (const auto& w : s.weights()) ++counts[line_of_weight(s.group(), w)];
  CohomSphereData d{s.group(), sphere_dim(s), -1, {}};
  for (const auto& [line, c] : counts) {
    d.fixed.push_back({line.direction(), dim_from_count(s.group(), c)});
  }
  return d;
}

std::vector<Violation> validate(const CohomSphereData& d) {
  std::vector<Violation> out;
  const auto& g = d.group;
  const bool needs_parity = g.p() != 2;

  if (d.r < -1 || d.r > d.n) {
    out.push_back({"smith_range", "Smith range violated: need -1 <= r <= n, got n = " +
                                      std::to_string(d.n) + ", r = " + std::to_string(d.r)});
  }
  if (needs_parity && (d.n - d.r) % 2 != 0) {
    out.push_back({"parity", "n - r = " + std::to_string(d.n - d.r) +
                                 " is odd; p = " + std::to_string(g.p()) + " requires it even"});
  }

  std::set<std::vector<std::int64_t>> seen;
  std::int64_t borel_sum = 0;
  for (const auto& e : d.fixed) {
    const std::string name = describe(e.line);
    if (e.line.size() != g.rank()) {
      out.push_back({"line_rank", "line " + name + " has length " + std::to_string(e.line.size()) +
                                      ", expected " + std::to_string(g.rank())});
      continue;
    }
    if (std::all_of(e.line.begin(), e.line.end(), [](auto c) { return c == 0; })) {
      out.push_back({"line_zero", "line " + name + " is the zero vector"});
      continue;
    }
    if (!is_normalized_direction(g, e.line)) {
      const auto canonical = SubtorusLine::of(g, e.line);
      out.push_back({"line_not_normalized",
                     "line " + name + " is not normalized; canonical form is " + canonical.to_string()});
    }
    if (!seen.insert(e.line).second) {
      out.push_back({"duplicate_line", "line " + name + " is listed more than once"});
    }
    if (e.dim < d.r || e.dim > d.n) {
      out.push_back({"dim_range", "dim X^H = " + std::to_string(e.dim) + " on line " + name +
                                      " outside [r, n] = [" + std::to_string(d.r) + ", " +
                                      std::to_string(d.n) + "]"});
    }
    if (needs_parity && (e.dim - d.r) % 2 != 0) {
      out.push_back({"line_parity", "n(H) - r = " + std::to_string(e.dim - d.r) + " on line " +
                                        name + " is odd"});
    }
    borel_sum += e.dim - d.r;
  }
  if (borel_sum != d.n - d.r) {
    out.push_back({"borel_formula", "Borel formula violated: n - r = " + std::to_string(d.n - d.r) +
                                        " but sum of n(H) - r = " + std::to_string(borel_sum)});
  }
  return out;
}

void require_valid(const CohomSphereData& d) {
  const auto violations = validate(d);
  if (violations.empty()) return;
  std::string message = "invalid cohomology sphere data:";
  for (const auto& v : violations) message += " [" + v.code + "] " + v.message + ";";
  message.pop_back();
  fail(ErrorKind::validation, message);
}

void require_free_of_fixed_points(const CohomSphereData& d, const char* what) {
  if (d.r != -1) {
    fail(ErrorKind::hypothesis, std::string(what) + " requires X^G empty (r = -1), got r = " +
                                    std::to_string(d.r));
  }
}

}  // namespace cohomlen
