#include "core/oracle.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <set>

#include "core/error.hpp"

namespace cohomlen {

// The length asks for orbits G/H_1..G/H_lambda such that every product of
// kernel elements w_i in (s_{H_i}) annihilates H*_G(S(V)), whose annihilator
// is (e). Each kernel ideal is principal, and (s_{H_1}...s_{H_lambda})
// contains every such product, so testing the generators' product against
// (e) decides the condition. For p > 2 everything stays in the polynomial
// part of H*(BG).

namespace {

struct Search {
  const std::vector<Polynomial>& forms;
  const Polynomial& euler;
  std::vector<std::size_t> chosen;
  std::uint64_t examined = 0;

  // Multisets of size `remaining` more elements, starting at index `from`,
  // on top of `prefix`. True when a member of (e) is found; `chosen` then
  // holds the witness.
  bool extend(const Polynomial& prefix, std::size_t from, std::int64_t remaining) {
    if (remaining == 0) {
      ++examined;
      return ideal_member(euler, prefix);
    }
    for (std::size_t i = from; i < forms.size(); ++i) {
      chosen.push_back(i);
      if (extend(prefix * forms[i], i, remaining - 1)) return true;
      chosen.pop_back();
    }
    return false;
  }
};

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
  return a > std::numeric_limits<std::uint64_t>::max() - b ? std::numeric_limits<std::uint64_t>::max()
                                                           : a + b;
}

}  // namespace

bool ideal_member(const Polynomial& e, const Polynomial& candidate) {
  if (e.is_zero()) fail(ErrorKind::domain, "the zero ideal generator is not allowed");
  return poly_divides(e, candidate);
}

Polynomial rep_sphere_euler_polynomial(const RepSphere& s) {
  const Field field = s.group().field();
  std::vector<LinearFactor> factors;
  factors.reserve(s.weights().size());
  for (const auto& w : s.weights()) {
    std::vector<Scalar> coefficients;
    for (auto c : w.components()) coefficients.emplace_back(field, c);
    factors.push_back({LinearForm(field, std::move(coefficients)), 1});
  }
  return linear_product(field, s.group().rank(), factors);
}

std::vector<SubtorusLine> oracle_lines(const RepSphere& s) {
  if (!s.group().is_torus()) return enumerate_lines(s.group());
  std::set<SubtorusLine> lines;
  for (const auto& w : s.weights()) lines.insert(line_of_weight(s.group(), w));
  return {lines.begin(), lines.end()};
}

std::uint64_t search_space_size(std::uint64_t lines, std::int64_t lambda_max) {
  // C(L + l - 1, l) for l = 0..lambda_max, via C(L+l-1, l) = C(L+l-2, l-1) * (L+l-1) / l.
  std::uint64_t total = 1;
  unsigned __int128 term = 1;
  for (std::int64_t l = 1; l <= lambda_max; ++l) {
    if (lines == 0) break;
    term = term * (lines + static_cast<std::uint64_t>(l) - 1) / static_cast<std::uint64_t>(l);
    if (term > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
    total = saturating_add(total, static_cast<std::uint64_t>(term));
    if (total == std::numeric_limits<std::uint64_t>::max()) return total;
  }
  return total;
}

OracleReport brute_force_length(const RepSphere& s, std::int64_t lambda_max, std::uint64_t budget) {
  if (lambda_max < 1) fail(ErrorKind::domain, "lambda_max must be at least 1");
  const auto lines = oracle_lines(s);
  const auto space = search_space_size(lines.size(), lambda_max);
  if (space > budget) {
    fail(ErrorKind::search, "search space of " + std::to_string(space) +
                                " candidate multisets exceeds the budget of " + std::to_string(budget));
  }

  std::vector<Polynomial> forms;
  forms.reserve(lines.size());
  for (const auto& line : lines) forms.push_back(s_H(s.group(), line).to_polynomial());
  const Polynomial euler = rep_sphere_euler_polynomial(s);
  const Field field = s.group().field();
  const Polynomial one = Polynomial::constant(field, s.group().rank(), Scalar::one(field));

  Search search{forms, euler, {}, 0};
  for (std::int64_t lambda = 0; lambda <= lambda_max; ++lambda) {
    search.chosen.clear();
    if (!search.extend(one, 0, lambda)) continue;
    OracleReport report{lambda, {}, length_rep_sphere(s).lo, false, lambda_max, search.examined};
    for (auto i : search.chosen) report.witness.push_back(lines[i]);
    report.agrees = report.lambda == report.formula_value;
    return report;
  }
  fail(ErrorKind::search, "no lambda <= " + std::to_string(lambda_max) +
                              " annihilates; the bounded search is exhausted");
}

OracleReport cross_check(const RepSphere& s, std::int64_t lambda_max, std::uint64_t budget) {
  OracleReport report = brute_force_length(s, lambda_max, budget);
  const auto via_sphere = length_rep_sphere(s);
  const auto via_pair = length_of_pair(to_cohom_data(s), true);
  report.agrees = via_pair.kind == LengthKind::exact && report.lambda == via_sphere.lo &&
                  report.lambda == via_pair.lo;
  return report;
}

}  // namespace cohomlen
