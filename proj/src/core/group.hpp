#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "core/polynomial.hpp"

namespace cohomlen {

// G = (Z_p)^k for prime p, or the torus (S^1)^k when p = 0.
class GroupSpec {
 public:
  GroupSpec(std::int64_t p, std::size_t rank);

  std::int64_t p() const noexcept { return p_; }
  std::size_t rank() const noexcept { return rank_; }
  bool is_torus() const noexcept { return p_ == 0; }
  Field field() const { return Field(p_); }
  // Cohomological degree of each generator t_i: 1 for p = 2, else 2.
  int generator_degree() const noexcept { return p_ == 2 ? 1 : 2; }

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;

  std::string to_string() const;

 private:
  std::int64_t p_;
  std::size_t rank_;
};

// A character of G. Components are canonical residues in [0, p) for prime p
// and arbitrary integers for the torus.
class Weight {
 public:
  Weight(const GroupSpec& group, std::vector<std::int64_t> components);

  const std::vector<std::int64_t>& components() const noexcept { return components_; }
  bool is_zero() const noexcept;

  friend bool operator==(const Weight&, const Weight&) = default;

 private:
  std::vector<std::int64_t> components_;
};

// A corank-1 subtorus, named by the projective class of the characters that
// vanish on it. The direction is normalized: first nonzero entry 1 (prime p),
// or primitive with positive first nonzero entry (p = 0).
class SubtorusLine {
 public:
  // Projective class of a nonzero vector. Domain error on zero.
  static SubtorusLine of(const GroupSpec& group, const std::vector<std::int64_t>& vector);

  const std::vector<std::int64_t>& direction() const noexcept { return direction_; }

  friend bool operator==(const SubtorusLine&, const SubtorusLine&) = default;
  friend auto operator<=>(const SubtorusLine&, const SubtorusLine&) = default;

  std::string to_string() const;

 private:
  explicit SubtorusLine(std::vector<std::int64_t> direction) : direction_(std::move(direction)) {}

  std::vector<std::int64_t> direction_;
};

// Normalized representative of a nonzero vector; domain error on zero or a
// rank mismatch.
std::vector<std::int64_t> normalize_direction(const GroupSpec& group,
                                              const std::vector<std::int64_t>& vector);
bool is_normalized_direction(const GroupSpec& group, const std::vector<std::int64_t>& vector);

SubtorusLine line_of_weight(const GroupSpec& group, const Weight& w);
// True iff w restricts trivially to the subtorus H, i.e. w is proportional
// to H's direction.
bool vanishes_on(const GroupSpec& group, const Weight& w, const SubtorusLine& line);
// All (p^k - 1)/(p - 1) lines in lexicographic order. Unsupported for p = 0.
std::vector<SubtorusLine> enumerate_lines(const GroupSpec& group);
std::uint64_t line_count(const GroupSpec& group);
// Generator sum_j direction_j * t_j of the kernel of H*(BG) -> H*(BH).
LinearForm s_H(const GroupSpec& group, const SubtorusLine& line);

}  // namespace cohomlen
