#include "core/scalar.hpp"

#include "core/error.hpp"

namespace cohomlen {

namespace {

std::uint32_t reduce(std::int64_t value, std::int64_t p) {
  std::int64_t r = value % p;
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r);
}

void require_same_field(const Scalar& a, const Scalar& b) {
  if (a.field() != b.field()) {
    fail(ErrorKind::structural, "scalar field mismatch: characteristic " +
                                    std::to_string(a.field().characteristic()) + " vs " +
                                    std::to_string(b.field().characteristic()));
  }
}

}  // namespace

bool is_prime(std::int64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::int64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

Field::Field(std::int64_t characteristic) : p_(characteristic) {
  if (p_ != 0 && !(p_ <= max_characteristic && is_prime(p_))) {
    fail(ErrorKind::domain,
         "characteristic must be 0 or a prime below 2^31, got " + std::to_string(p_));
  }
}

Scalar::Scalar(Field field, std::int64_t value) : field_(field) {
  if (field.is_rational()) {
    value_ = Rational(value);
  } else {
    value_ = reduce(value, field.characteristic());
  }
}

Scalar::Scalar(Field field, const Rational& value) : field_(field) {
  if (field.is_rational()) {
    value_ = value;
    return;
  }
  // Map a rational into F_p; the denominator must be a unit.
  const Integer p = field.characteristic();
  const Integer num = boost::multiprecision::numerator(value) % p;
  const Integer den = boost::multiprecision::denominator(value) % p;
  if (den == 0) {
    fail(ErrorKind::domain, "denominator vanishes modulo " + std::to_string(field.characteristic()));
  }
  const Scalar n(field, static_cast<std::int64_t>(num));
  const Scalar d(field, static_cast<std::int64_t>(den));
  *this = n / d;
}

bool Scalar::is_zero() const noexcept {
  if (const auto* r = std::get_if<std::uint32_t>(&value_)) return *r == 0;
  return std::get<Rational>(value_) == 0;
}

bool Scalar::is_one() const noexcept {
  if (const auto* r = std::get_if<std::uint32_t>(&value_)) return *r == 1;
  return std::get<Rational>(value_) == 1;
}

std::uint32_t Scalar::residue() const {
  if (const auto* r = std::get_if<std::uint32_t>(&value_)) return *r;
  fail(ErrorKind::structural, "residue requested for a rational scalar");
}

const Rational& Scalar::rational() const {
  if (const auto* q = std::get_if<Rational>(&value_)) return *q;
  fail(ErrorKind::structural, "rational value requested for an F_p scalar");
}

int Scalar::sign() const noexcept {
  if (const auto* q = std::get_if<Rational>(&value_)) return q->sign();
  return is_zero() ? 0 : 1;
}

Scalar Scalar::inverse() const {
  if (is_zero()) fail(ErrorKind::domain, "inverse of zero");
  if (field_.is_rational()) return Scalar(field_, Rational(1) / rational());
  // Extended Euclid on (a, p).
  std::int64_t a = residue(), m = field_.characteristic();
  std::int64_t x0 = 1, x1 = 0;
  while (m != 0) {
    const std::int64_t q = a / m;
    std::int64_t t = a - q * m;
    a = m;
    m = t;
    t = x0 - q * x1;
    x0 = x1;
    x1 = t;
  }
  return Scalar(field_, x0);
}

Scalar Scalar::operator-() const {
  if (field_.is_rational()) return Scalar(field_, Rational(-rational()));
  return Scalar(field_, -static_cast<std::int64_t>(residue()));
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  require_same_field(a, b);
  if (a.field_.is_rational()) return Scalar(a.field_, Rational(a.rational() + b.rational()));
  return Scalar(a.field_, static_cast<std::int64_t>(a.residue()) + b.residue());
}

Scalar operator-(const Scalar& a, const Scalar& b) {
  require_same_field(a, b);
  if (a.field_.is_rational()) return Scalar(a.field_, Rational(a.rational() - b.rational()));
  return Scalar(a.field_, static_cast<std::int64_t>(a.residue()) - b.residue());
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  require_same_field(a, b);
  if (a.field_.is_rational()) return Scalar(a.field_, Rational(a.rational() * b.rational()));
  const std::uint64_t prod = std::uint64_t{a.residue()} * b.residue();
  return Scalar(a.field_, static_cast<std::int64_t>(
                              prod % static_cast<std::uint64_t>(a.field_.characteristic())));
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  require_same_field(a, b);
  return a * b.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
  return a.field_ == b.field_ && a.value_ == b.value_;
}

std::string Scalar::to_string() const {
  if (const auto* r = std::get_if<std::uint32_t>(&value_)) return std::to_string(*r);
  return std::get<Rational>(value_).str();
}

}  // namespace cohomlen
