#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "core/group.hpp"

namespace cohomlen {

// Unit sphere S(V) of a representation V with V^G = {0}, given by the
// weights of its irreducible summands (real lines for p = 2, complex lines
// otherwise).
class RepSphere {
 public:
  // Domain error when weights is empty or contains a zero weight.
  RepSphere(GroupSpec group, std::vector<Weight> weights);

  const GroupSpec& group() const noexcept { return group_; }
  const std::vector<Weight>& weights() const noexcept { return weights_; }

 private:
  GroupSpec group_;
  std::vector<Weight> weights_;
};

struct FixedEntry {
  std::vector<std::int64_t> line;  // as supplied; validate() checks normalization
  std::int64_t dim;
};

// An abstract (mod p)-cohomology n-sphere X with dim X^G = r (-1 when empty)
// and dim X^H for the listed corank-1 subtori. Unlisted lines have
// dim X^H = r.
struct CohomSphereData {
  GroupSpec group;
  std::int64_t n;
  std::int64_t r;
  std::vector<FixedEntry> fixed;

  // n(H) for a line; r when the line is not listed.
  std::int64_t dim_at(const SubtorusLine& line) const;
  // Listed entries as (line, dim), sorted by line. Assumes valid data.
  std::vector<std::pair<SubtorusLine, std::int64_t>> table() const;
};

struct Violation {
  std::string code;
  std::string message;
};

std::int64_t sphere_dim(const RepSphere& s);
// dim S(V)^H; -1 when no weight vanishes on H.
std::int64_t fixed_dim(const RepSphere& s, const SubtorusLine& line);
CohomSphereData to_cohom_data(const RepSphere& s);

// All violations of the Smith range, Borel formula, parity and table-key
// constraints. Empty means valid.
std::vector<Violation> validate(const CohomSphereData& d);
// Throws a validation error listing every violation.
void require_valid(const CohomSphereData& d);
// Throws a hypothesis error unless X^G is empty (r = -1).
void require_free_of_fixed_points(const CohomSphereData& d, const char* what);

}  // namespace cohomlen
