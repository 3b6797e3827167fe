#include "core/polynomial.hpp"

#include <algorithm>
#include <limits>

#include "core/error.hpp"

namespace cohomlen {

namespace {

Exponents add_exponents(const Exponents& a, const Exponents& b) {
  Exponents out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (b[i] > std::numeric_limits<std::uint32_t>::max() - a[i]) {
      fail(ErrorKind::domain, "exponent overflow");
    }
    out[i] = a[i] + b[i];
  }
  return out;
}

bool monomial_divides(const Exponents& d, const Exponents& a) {
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] > a[i]) return false;
  }
  return true;
}

Exponents sub_exponents(const Exponents& a, const Exponents& b) {
  Exponents out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

std::string variable_name(std::size_t index, std::size_t nvars) {
  if (nvars == 1) return "t";
  return "t" + std::to_string(index + 1);
}

}  // namespace

std::uint64_t total_degree(const Exponents& e) noexcept {
  std::uint64_t d = 0;
  for (auto x : e) d += x;
  return d;
}

bool GradedLexDescending::operator()(const Exponents& a, const Exponents& b) const noexcept {
  const auto da = total_degree(a), db = total_degree(b);
  if (da != db) return da > db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

Polynomial::Polynomial(Field field, std::size_t nvars) : field_(field), nvars_(nvars) {}

Polynomial Polynomial::constant(Field field, std::size_t nvars, const Scalar& c) {
  Polynomial p(field, nvars);
  p.add_term(Exponents(nvars, 0), c);
  return p;
}

Polynomial Polynomial::variable(Field field, std::size_t nvars, std::size_t index) {
  if (index >= nvars) fail(ErrorKind::structural, "variable index out of range");
  Exponents e(nvars, 0);
  e[index] = 1;
  return term(field, std::move(e), Scalar::one(field));
}

Polynomial Polynomial::term(Field field, Exponents exponents, const Scalar& c) {
  Polynomial p(field, exponents.size());
  p.add_term(exponents, c);
  return p;
}

void Polynomial::add_term(const Exponents& e, const Scalar& c) {
  if (c.field() != field_) fail(ErrorKind::structural, "coefficient field mismatch");
  if (e.size() != nvars_) fail(ErrorKind::structural, "exponent vector length mismatch");
  if (c.is_zero()) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

bool Polynomial::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
}

std::int64_t Polynomial::degree() const noexcept {
  if (terms_.empty()) return -1;
  return static_cast<std::int64_t>(total_degree(terms_.begin()->first));
}

bool Polynomial::is_homogeneous() const noexcept {
  if (terms_.empty()) return true;
  const auto d = total_degree(terms_.begin()->first);
  return total_degree(terms_.rbegin()->first) == d;
}

Scalar Polynomial::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Scalar::zero(field_) : it->second;
}

const std::pair<const Exponents, Scalar>& Polynomial::leading_term() const {
  if (terms_.empty()) fail(ErrorKind::domain, "leading term of the zero polynomial");
  return *terms_.begin();
}

Polynomial Polynomial::operator-() const {
  Polynomial out(field_, nvars_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

Polynomial Polynomial::scaled(const Scalar& c) const {
  Polynomial out(field_, nvars_);
  if (c.is_zero()) return out;
  for (const auto& [e, coef] : terms_) out.terms_.emplace(e, coef * c);
  return out;
}

void require_compatible(const Polynomial& a, const Polynomial& b) {
  if (a.field() != b.field() || a.nvars() != b.nvars()) {
    fail(ErrorKind::structural, "polynomial ring mismatch: (p=" +
                                    std::to_string(a.field().characteristic()) +
                                    ", k=" + std::to_string(a.nvars()) + ") vs (p=" +
                                    std::to_string(b.field().characteristic()) +
                                    ", k=" + std::to_string(b.nvars()) + ")");
  }
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  require_compatible(a, b);
  Polynomial out = a;
  for (const auto& [e, c] : b.terms_) out.add_term(e, c);
  return out;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_compatible(a, b);
  Polynomial out(a.field_, a.nvars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) out.add_term(add_exponents(ea, eb), ca * cb);
  }
  return out;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  return a.field_ == b.field_ && a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
}

std::optional<Polynomial> Polynomial::exact_quotient(const Polynomial& divisor) const {
  require_compatible(*this, divisor);
  if (divisor.is_zero()) fail(ErrorKind::domain, "division by the zero polynomial");
  // Single-divisor division algorithm. The remainder is unique, and zero
  // exactly when divisor | *this, so the first leading term that the
  // divisor's leading monomial does not divide proves non-divisibility.
  const auto& [lead_exp, lead_coef] = divisor.leading_term();
  const Scalar lead_inv = lead_coef.inverse();
  Polynomial remainder = *this;
  Polynomial quotient(field_, nvars_);
  while (!remainder.is_zero()) {
    const auto& [e, c] = remainder.leading_term();
    if (!monomial_divides(lead_exp, e)) return std::nullopt;
    const Polynomial step = term(field_, sub_exponents(e, lead_exp), c * lead_inv);
    quotient = quotient + step;
    remainder = remainder - step * divisor;
  }
  return quotient;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Scalar magnitude = c;
    if (c.sign() < 0) {
      out += first ? "-" : " - ";
      magnitude = -c;
    } else if (!first) {
      out += " + ";
    }
    first = false;

    std::vector<std::string> factors;
    if (!magnitude.is_one() || total_degree(e) == 0) factors.push_back(magnitude.to_string());
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      std::string v = variable_name(i, nvars_);
      if (e[i] > 1) v += "^" + std::to_string(e[i]);
      factors.push_back(std::move(v));
    }
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (i > 0) out += "*";
      out += factors[i];
    }
  }
  return out;
}

Polynomial poly_add(const Polynomial& a, const Polynomial& b) { return a + b; }

Polynomial poly_mul(const Polynomial& a, const Polynomial& b) { return a * b; }

bool poly_divides(const Polynomial& d, const Polynomial& a) {
  return a.exact_quotient(d).has_value();
}

LinearForm::LinearForm(Field field, std::vector<Scalar> coefficients)
    : field_(field), coefficients_(std::move(coefficients)) {
  if (coefficients_.empty()) fail(ErrorKind::structural, "linear form over zero variables");
  bool all_zero = true;
  for (const auto& c : coefficients_) {
    if (c.field() != field_) fail(ErrorKind::structural, "linear form coefficient field mismatch");
    all_zero = all_zero && c.is_zero();
  }
  if (all_zero) fail(ErrorKind::domain, "zero linear form");
}

Polynomial LinearForm::to_polynomial() const {
  Polynomial out(field_, nvars());
  for (std::size_t i = 0; i < nvars(); ++i) {
    out = out + Polynomial::variable(field_, nvars(), i).scaled(coefficients_[i]);
  }
  return out;
}

LinearForm LinearForm::monic() const {
  const auto lead = std::find_if(coefficients_.begin(), coefficients_.end(),
                                 [](const Scalar& c) { return !c.is_zero(); });
  const Scalar inv = lead->inverse();
  std::vector<Scalar> out;
  out.reserve(coefficients_.size());
  for (const auto& c : coefficients_) out.push_back(c * inv);
  return LinearForm(field_, std::move(out));
}

Polynomial linear_product(Field field, std::size_t nvars, std::span<const LinearFactor> factors) {
  Polynomial out = Polynomial::constant(field, nvars, Scalar::one(field));
  for (const auto& f : factors) {
    if (f.form.field() != field || f.form.nvars() != nvars) {
      fail(ErrorKind::structural, "linear form ring mismatch");
    }
    const Polynomial base = f.form.to_polynomial();
    for (std::uint32_t i = 0; i < f.multiplicity; ++i) out = out * base;
  }
  return out;
}

std::optional<LineFactorization> factor_into_lines(const Polynomial& a,
                                                   std::span<const LinearForm> candidates) {
  if (a.is_zero()) fail(ErrorKind::domain, "cannot factor the zero polynomial");
  std::vector<LinearForm> distinct;
  std::vector<LinearForm> distinct_monic;
  for (const auto& c : candidates) {
    if (c.field() != a.field() || c.nvars() != a.nvars()) {
      fail(ErrorKind::structural, "candidate line ring mismatch");
    }
    LinearForm m = c.monic();
    if (std::find(distinct_monic.begin(), distinct_monic.end(), m) != distinct_monic.end()) continue;
    distinct.push_back(c);
    distinct_monic.push_back(std::move(m));
  }

  LineFactorization result{{}, Scalar::one(a.field())};
  Polynomial rest = a;
  for (const auto& line : distinct) {
    const Polynomial divisor = line.to_polynomial();
    std::uint32_t mult = 0;
    while (rest.degree() > 0) {
      auto q = rest.exact_quotient(divisor);
      if (!q) break;
      rest = std::move(*q);
      ++mult;
    }
    if (mult > 0) result.factors.push_back({line, mult});
  }
  if (!rest.is_constant()) return std::nullopt;
  result.unit = rest.coefficient(Exponents(a.nvars(), 0));
  return result;
}

}  // namespace cohomlen
