#pragma once

#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

#include "core/spheres.hpp"

namespace cohomlen {

enum class LengthKind { exact, interval };

// Which result produced a length value.
enum class LengthBasis {
  sphere_pair_mod2,       // l(X, X^G) = n - r, p = 2
  sphere_pair_half,       // l(X, X^G) = (n - r)/2, p = 0 or polynomial Euler class
  sphere_pair_interval,   // p > 2, Euler class not polynomial
  rep_sphere,             // l(S(V)) = number of irreducible summands
  subtorus,               // l_H(X^H, X^G)
};

std::string_view basis_tag(LengthBasis basis) noexcept;

struct LengthResult {
  LengthKind kind;
  std::int64_t lo;
  std::int64_t hi;
  LengthBasis basis;

  static LengthResult exact(std::int64_t value, LengthBasis basis) {
    return {LengthKind::exact, value, value, basis};
  }
  friend bool operator==(const LengthResult&, const LengthResult&) = default;
};

struct EulerClass {
  std::vector<std::pair<SubtorusLine, std::uint32_t>> factors;  // sorted by line
  Polynomial polynomial;                                       // prod s_H^k_H
  std::int64_t cohomological_degree;                           // n - r
};

// e(X, X^G) = prod_H s_H^{k_H} with k_H = n(H) - r (p = 2) or (n(H) - r)/2.
EulerClass euler_class(const CohomSphereData& d);

// euler_is_polynomial is only consulted for p > 2.
LengthResult length_of_pair(const CohomSphereData& d, bool euler_is_polynomial);
LengthResult length_rep_sphere(const RepSphere& s);
// Zero for lines that are not listed (n(H) = r).
LengthResult length_H(const CohomSphereData& d, const SubtorusLine& line);

// alpha * (dim + 1), the orbit-count upper bound. Domain error unless
// alpha >= 1 and dim >= 0.
std::int64_t upper_bound_length(std::int64_t alpha, std::int64_t dim);
// Sum of l_H over listed lines; requires r = -1.
std::int64_t lower_bound_length(const CohomSphereData& d);
// A-genus = A-cat = n + 1 for a G-ANR cohomology sphere, p prime, r = -1.
std::int64_t a_genus_of_sphere(const CohomSphereData& d);

}  // namespace cohomlen
