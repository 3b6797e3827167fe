#pragma once

#include <cstdint>
#include <vector>

#include "core/length.hpp"

namespace cohomlen {

inline constexpr std::uint64_t default_search_budget = 10'000'000;

struct OracleReport {
  std::int64_t lambda;
  std::vector<SubtorusLine> witness;  // nondecreasing, size lambda
  std::int64_t formula_value;
  bool agrees;
  std::int64_t search_bound;
  std::uint64_t candidates_examined;
};

// Membership of candidate in the principal ideal (e). Domain error on e = 0.
bool ideal_member(const Polynomial& e, const Polynomial& candidate);

// Euler polynomial of S(V) as the product of the weights' linear forms,
// computed straight from the weights.
Polynomial rep_sphere_euler_polynomial(const RepSphere& s);

// Lines the search ranges over: every line for prime p, the weights' lines
// for the torus.
std::vector<SubtorusLine> oracle_lines(const RepSphere& s);

// Number of multisets of size 0..lambda_max over `lines` elements, saturating
// at UINT64_MAX.
std::uint64_t search_space_size(std::uint64_t lines, std::int64_t lambda_max);

// Smallest lambda <= lambda_max with prod s_{H_i} in (e), searching
// multisets by size then lexicographically. Search error when no lambda
// works or the search space exceeds budget.
OracleReport brute_force_length(const RepSphere& s, std::int64_t lambda_max,
                                std::uint64_t budget = default_search_budget);

// brute_force_length plus agreement with both formula paths.
OracleReport cross_check(const RepSphere& s, std::int64_t lambda_max,
                         std::uint64_t budget = default_search_budget);

}  // namespace cohomlen
