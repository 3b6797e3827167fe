#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "core/scalar.hpp"

namespace cohomlen {

// Dense exponent vector, one entry per variable t_1..t_k.
using Exponents = std::vector<std::uint32_t>;

std::uint64_t total_degree(const Exponents& e) noexcept;

// Graded lexicographic order, largest monomial first. Used for the term map
// so that iteration order is the canonical serialization order.
struct GradedLexDescending {
  bool operator()(const Exponents& a, const Exponents& b) const noexcept;
};

// Sparse multivariate polynomial over F_p or Q. Immutable from the outside;
// no stored term has a zero coefficient.
class Polynomial {
 public:
  using TermMap = std::map<Exponents, Scalar, GradedLexDescending>;

  Polynomial(Field field, std::size_t nvars);

  static Polynomial constant(Field field, std::size_t nvars, const Scalar& c);
  static Polynomial variable(Field field, std::size_t nvars, std::size_t index);
  static Polynomial term(Field field, Exponents exponents, const Scalar& c);

  Field field() const noexcept { return field_; }
  std::size_t nvars() const noexcept { return nvars_; }
  const TermMap& terms() const noexcept { return terms_; }

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  // Total degree; -1 for the zero polynomial.
  std::int64_t degree() const noexcept;
  bool is_homogeneous() const noexcept;
  Scalar coefficient(const Exponents& e) const;
  // Leading term under graded lex; the polynomial must be nonzero.
  const std::pair<const Exponents, Scalar>& leading_term() const;

  Polynomial operator-() const;
  Polynomial scaled(const Scalar& c) const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b);

  // q with *this == divisor * q, or nullopt when divisor does not divide.
  // Domain error when divisor is zero.
  std::optional<Polynomial> exact_quotient(const Polynomial& divisor) const;

  // Canonical text: terms in descending graded-lex order, e.g.
  // "2*t1^2*t2 + t2^3". Single-variable rings use "t".
  std::string to_string() const;

 private:
  void add_term(const Exponents& e, const Scalar& c);

  Field field_;
  std::size_t nvars_;
  TermMap terms_;
};

void require_compatible(const Polynomial& a, const Polynomial& b);

Polynomial poly_add(const Polynomial& a, const Polynomial& b);
Polynomial poly_mul(const Polynomial& a, const Polynomial& b);
// True iff a = d*q for some q. Domain error when d is zero.
bool poly_divides(const Polynomial& d, const Polynomial& a);

// Nonzero homogeneous degree-1 form sum_j c_j t_j.
class LinearForm {
 public:
  LinearForm(Field field, std::vector<Scalar> coefficients);

  Field field() const noexcept { return field_; }
  std::size_t nvars() const noexcept { return coefficients_.size(); }
  const std::vector<Scalar>& coefficients() const noexcept { return coefficients_; }

  Polynomial to_polynomial() const;
  // Same form scaled so that its first nonzero coefficient is 1.
  LinearForm monic() const;

  friend bool operator==(const LinearForm&, const LinearForm&) = default;

 private:
  Field field_;
  std::vector<Scalar> coefficients_;
};

struct LinearFactor {
  LinearForm form;
  std::uint32_t multiplicity;
};

// Expanded product of form^multiplicity. The empty product is 1, which needs
// the ring passed explicitly.
Polynomial linear_product(Field field, std::size_t nvars, std::span<const LinearFactor> factors);

struct LineFactorization {
  std::vector<LinearFactor> factors;  // in candidate order, multiplicity >= 1
  Scalar unit;
};

// Writes a as unit * prod candidate^m by trial division. Projectively equal
// candidates are merged (the first occurrence is kept). nullopt when a is not
// a product of candidate lines. Domain error when a is zero.
std::optional<LineFactorization> factor_into_lines(const Polynomial& a,
                                                   std::span<const LinearForm> candidates);

}  // namespace cohomlen
