#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include <boost/multiprecision/cpp_int.hpp>

namespace cohomlen {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Largest supported prime characteristic; residues and their products must
// fit in 64-bit arithmetic.
inline constexpr std::int64_t max_characteristic = (std::int64_t{1} << 31) - 1;

bool is_prime(std::int64_t n) noexcept;

// Coefficient field: F_p for a prime p, or Q when the characteristic is 0.
class Field {
 public:
  // Throws a domain error unless characteristic is 0 or a supported prime.
  explicit Field(std::int64_t characteristic);

  static Field rationals() { return Field(0); }

  std::int64_t characteristic() const noexcept { return p_; }
  bool is_rational() const noexcept { return p_ == 0; }

  friend bool operator==(const Field&, const Field&) = default;

 private:
  std::int64_t p_;
};

// An element of a Field. F_p values are stored as canonical residues in
// [0, p); rationals are kept in lowest terms with positive denominator
// (guaranteed by cpp_rational).
class Scalar {
 public:
  Scalar(Field field, std::int64_t value);
  Scalar(Field field, const Rational& value);

  static Scalar zero(Field field) { return Scalar(field, std::int64_t{0}); }
  static Scalar one(Field field) { return Scalar(field, std::int64_t{1}); }

  Field field() const noexcept { return field_; }
  bool is_zero() const noexcept;
  bool is_one() const noexcept;
  // Residue for F_p; throws structural for Q.
  std::uint32_t residue() const;
  // Exact value for Q; throws structural for F_p.
  const Rational& rational() const;
  // Sign of the value for Q, always +1 (or 0) for F_p representatives.
  int sign() const noexcept;

  Scalar inverse() const;  // domain error on zero

  Scalar operator-() const;
  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }

  friend bool operator==(const Scalar& a, const Scalar& b);

  // Decimal residue for F_p; "n" or "n/d" for Q.
  std::string to_string() const;

 private:
  Field field_;
  std::variant<std::uint32_t, Rational> value_;
};

}  // namespace cohomlen
