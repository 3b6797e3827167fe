#include "core/length.hpp"

#include <limits>

#include "core/error.hpp"

namespace cohomlen {

namespace {

// Multiplicity of s_H in the Euler class for a fixed-set codimension n(H) - r.
std::int64_t line_multiplicity(const GroupSpec& g, std::int64_t codim) {
  return g.p() == 2 ? codim : codim / 2;
}

}  // namespace

std::string_view basis_tag(LengthBasis basis) noexcept {
  switch (basis) {
    case LengthBasis::sphere_pair_mod2: return "cohomology-sphere/p=2";
    case LengthBasis::sphere_pair_half: return "cohomology-sphere/half-codimension";
    case LengthBasis::sphere_pair_interval: return "cohomology-sphere/non-polynomial-interval";
    case LengthBasis::rep_sphere: return "representation-sphere/summand-count";
    case LengthBasis::subtorus: return "subtorus-length";
  }
  return "unknown";
}

EulerClass euler_class(const CohomSphereData& d) {
  require_valid(d);
  const Field field = d.group.field();
  EulerClass out{{}, Polynomial(field, d.group.rank()), d.n - d.r};
  std::vector<LinearFactor> factors;
  for (const auto& [line, dim] : d.table()) {
    const auto mult = line_multiplicity(d.group, dim - d.r);
    if (mult == 0) continue;
    if (mult > std::numeric_limits<std::uint32_t>::max()) {
      fail(ErrorKind::domain, "Euler class multiplicity too large to expand");
    }
    out.factors.emplace_back(line, static_cast<std::uint32_t>(mult));
    factors.push_back({s_H(d.group, line), static_cast<std::uint32_t>(mult)});
  }
  out.polynomial = linear_product(field, d.group.rank(), factors);
  return out;
}

LengthResult length_of_pair(const CohomSphereData& d, bool euler_is_polynomial) {
  require_valid(d);
  const std::int64_t codim = d.n - d.r;
  if (d.group.p() == 2) return LengthResult::exact(codim, LengthBasis::sphere_pair_mod2);
  if (d.group.is_torus() || euler_is_polynomial) {
    return LengthResult::exact(codim / 2, LengthBasis::sphere_pair_half);
  }
  // Lower end from deg e = n - r; upper end from z^2 lying in (e).
  return {LengthKind::interval, (codim + 1) / 2, codim, LengthBasis::sphere_pair_interval};
}

LengthResult length_rep_sphere(const RepSphere& s) {
  return LengthResult::exact(static_cast<std::int64_t>(s.weights().size()), LengthBasis::rep_sphere);
}

LengthResult length_H(const CohomSphereData& d, const SubtorusLine& line) {
  require_valid(d);
  return LengthResult::exact(line_multiplicity(d.group, d.dim_at(line) - d.r), LengthBasis::subtorus);
}

std::int64_t upper_bound_length(std::int64_t alpha, std::int64_t dim) {
  if (alpha < 1) fail(ErrorKind::domain, "alpha must be at least 1, got " + std::to_string(alpha));
  if (dim < 0) fail(ErrorKind::domain, "dimension must be nonnegative, got " + std::to_string(dim));
  std::int64_t out = 0;
  if (__builtin_mul_overflow(alpha, dim + 1, &out)) fail(ErrorKind::domain, "upper bound overflows");
  return out;
}

std::int64_t lower_bound_length(const CohomSphereData& d) {
  require_valid(d);
  require_free_of_fixed_points(d, "the subtorus lower bound");
  std::int64_t sum = 0;
  for (const auto& [line, dim] : d.table()) sum += length_H(d, line).lo;
  return sum;
}

std::int64_t a_genus_of_sphere(const CohomSphereData& d) {
  require_valid(d);
  if (d.group.is_torus()) {
    fail(ErrorKind::unsupported, "A-genus of cohomology spheres is only available for p-tori");
  }
  require_free_of_fixed_points(d, "the A-genus value");
  return d.n + 1;
}

}  // namespace cohomlen
