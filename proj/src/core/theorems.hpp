#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "core/length.hpp"

namespace cohomlen {

enum class Existence { yes, no, unknown };

std::string_view existence_tag(Existence e) noexcept;

struct MapVerdict {
  Existence exists;
  // Lines with dim X^H > dim Y^H; nonempty iff exists == no.
  std::vector<SubtorusLine> witnesses;
  std::string rationale;
  // Hypotheses the verdict is conditional on (never checked here).
  std::vector<std::string> assumptions;
  // Source dimension exceeds target dimension.
  bool dimension_obstruction = false;
};

// Necessary condition for an equivariant map X -> Y between cohomology
// spheres without fixed points. Returns no (with witnesses) or unknown.
MapVerdict borsuk_ulam_check(const CohomSphereData& x, const CohomSphereData& y);

// Exact existence criterion for maps from a G-ANR cohomology sphere into
// S(V), p prime. Never unknown.
MapVerdict map_exists_to_rep_sphere(const CohomSphereData& x, const RepSphere& v);

// Representation sphere of the same dimension as X with matching fixed-set
// dimensions on every listed line.
RepSphere canonical_target(const CohomSphereData& x);

struct BourginYangQuery {
  std::int64_t p;
  std::int64_t n;
  std::int64_t m;
  std::int64_t alpha;
};

struct BourginYangBound {
  Rational bound;         // exact lower bound for dim Z_f
  std::int64_t bound_int; // ceiling of bound
  bool nonempty;          // n > m forces Z_f nonempty
};

BourginYangBound bourgin_yang_bound(const BourginYangQuery& q);

// n - m - 1 for a closed orientable manifold source.
std::int64_t bourgin_yang_manifold(std::int64_t n, std::int64_t m);

struct RefinedBourginYang {
  std::int64_t total;
  std::vector<std::pair<SubtorusLine, std::int64_t>> per_line;
};

// Lower bound for l(Z_f): sum over X's lines of max(0, l_H(X) - l_H(Y)).
RefinedBourginYang refined_bourgin_yang(const CohomSphereData& x, const CohomSphereData& y);

}  // namespace cohomlen
