#include "core/group.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

#include "core/error.hpp"

namespace cohomlen {

namespace {

// Refuse enumerations larger than this; the oracle's budget is far smaller.
constexpr std::uint64_t max_enumerated_lines = 10'000'000;

std::string join_ints(const std::vector<std::int64_t>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(v[i]);
  }
  return out + ")";
}

std::int64_t mod(std::int64_t a, std::int64_t p) {
  std::int64_t r = a % p;
  return r < 0 ? r + p : r;
}

void require_rank(const GroupSpec& group, std::size_t size) {
  if (size != group.rank()) {
    fail(ErrorKind::structural, "vector of length " + std::to_string(size) +
                                    " for a group of rank " + std::to_string(group.rank()));
  }
}

}  // namespace

GroupSpec::GroupSpec(std::int64_t p, std::size_t rank) : p_(p), rank_(rank) {
  static_cast<void>(Field(p));  // validates the characteristic
  if (rank == 0) fail(ErrorKind::domain, "group rank must be at least 1");
}

std::string GroupSpec::to_string() const {
  if (p_ == 0) return "(S^1)^" + std::to_string(rank_);
  return "(Z_" + std::to_string(p_) + ")^" + std::to_string(rank_);
}

Weight::Weight(const GroupSpec& group, std::vector<std::int64_t> components)
    : components_(std::move(components)) {
  require_rank(group, components_.size());
  if (!group.is_torus()) {
    for (auto& c : components_) c = mod(c, group.p());
  }
}

bool Weight::is_zero() const noexcept {
  return std::all_of(components_.begin(), components_.end(), [](auto c) { return c == 0; });
}

std::vector<std::int64_t> normalize_direction(const GroupSpec& group,
                                              const std::vector<std::int64_t>& vector) {
  require_rank(group, vector.size());
  std::vector<std::int64_t> v = vector;
  if (group.is_torus()) {
    if (std::any_of(v.begin(), v.end(), [](auto c) { return c == INT64_MIN; })) {
      fail(ErrorKind::domain, "weight component out of range");
    }
    std::int64_t g = 0;
    for (auto c : v) g = std::gcd(g, c);
    if (g == 0) fail(ErrorKind::domain, "zero vector has no line");
    const auto lead = *std::find_if(v.begin(), v.end(), [](auto c) { return c != 0; });
    if (lead < 0) g = -g;
    for (auto& c : v) c /= g;
    return v;
  }
  const Field field = group.field();
  for (auto& c : v) c = mod(c, group.p());
  const auto lead = std::find_if(v.begin(), v.end(), [](auto c) { return c != 0; });
  if (lead == v.end()) fail(ErrorKind::domain, "zero vector has no line");
  const Scalar inv = Scalar(field, *lead).inverse();
  for (auto& c : v) c = (Scalar(field, c) * inv).residue();
  return v;
}

bool is_normalized_direction(const GroupSpec& group, const std::vector<std::int64_t>& vector) {
  if (vector.size() != group.rank()) return false;
  if (std::all_of(vector.begin(), vector.end(), [](auto c) { return c == 0; })) return false;
  if (!group.is_torus() &&
      std::any_of(vector.begin(), vector.end(), [&](auto c) { return c < 0 || c >= group.p(); })) {
    return false;
  }
  return normalize_direction(group, vector) == vector;
}

SubtorusLine SubtorusLine::of(const GroupSpec& group, const std::vector<std::int64_t>& vector) {
  return SubtorusLine(normalize_direction(group, vector));
}

std::string SubtorusLine::to_string() const { return join_ints(direction_); }

SubtorusLine line_of_weight(const GroupSpec& group, const Weight& w) {
  if (w.is_zero()) fail(ErrorKind::domain, "zero weight has no line");
  return SubtorusLine::of(group, w.components());
}

bool vanishes_on(const GroupSpec& group, const Weight& w, const SubtorusLine& line) {
  return line_of_weight(group, w) == line;
}

std::uint64_t line_count(const GroupSpec& group) {
  if (group.is_torus()) {
    fail(ErrorKind::unsupported, "the torus has infinitely many corank-1 subtori");
  }
  const auto p = static_cast<std::uint64_t>(group.p());
  std::uint64_t count = 0;
  for (std::size_t i = 0; i < group.rank(); ++i) {
    if (count > max_enumerated_lines) return count;
    count = count * p + 1;  // 1 + p + ... + p^(k-1)
  }
  return count;
}

std::vector<SubtorusLine> enumerate_lines(const GroupSpec& group) {
  const auto count = line_count(group);
  if (count > max_enumerated_lines) {
    fail(ErrorKind::unsupported, "too many lines to enumerate for " + group.to_string());
  }
  const std::size_t k = group.rank();
  const std::int64_t p = group.p();
  std::vector<SubtorusLine> lines;
  lines.reserve(count);
  // Lead position i: zeros before, 1 at i, free residues after. Iterating the
  // lead position from last to first, and the free block as a big-endian
  // base-p counter, gives lexicographic order directly.
  for (std::size_t lead = k; lead-- > 0;) {
    const std::size_t free = k - lead - 1;
    std::uint64_t block = 1;
    for (std::size_t i = 0; i < free; ++i) block *= static_cast<std::uint64_t>(p);
    std::vector<std::int64_t> v(k, 0);
    v[lead] = 1;
    for (std::uint64_t index = 0; index < block; ++index) {
      std::uint64_t rest = index;
      for (std::size_t pos = k; pos-- > lead + 1;) {
        v[pos] = static_cast<std::int64_t>(rest % static_cast<std::uint64_t>(p));
        rest /= static_cast<std::uint64_t>(p);
      }
      lines.push_back(SubtorusLine::of(group, v));
    }
  }
  return lines;
}

LinearForm s_H(const GroupSpec& group, const SubtorusLine& line) {
  const Field field = group.field();
  std::vector<Scalar> coefficients;
  coefficients.reserve(line.direction().size());
  for (auto c : line.direction()) coefficients.emplace_back(field, c);
  return LinearForm(field, std::move(coefficients));
}

}  // namespace cohomlen
