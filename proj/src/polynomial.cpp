#include "ncpart/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace ncpart {

namespace {

BigInt common_denominator(std::span<const Rational> c) {
  BigInt d = 1;
  for (const auto& r : c)
    if (r.get_den() != 1) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), r.get_den_mpz_t());
  return d;
}

std::vector<BigInt> scaled_numerators(std::span<const Rational> c, const BigInt& d) {
  std::vector<BigInt> out(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i].get_den() == d)
      out[i] = c[i].get_num();
    else
      out[i] = c[i].get_num() * (d / c[i].get_den());
  }
  return out;
}

void append_term(std::ostringstream& out, const Rational& c, const std::string& monomial, bool first) {
  Rational magnitude = abs(c);
  if (first) {
    if (sgn(c) < 0) out << '-';
  } else {
    out << (sgn(c) < 0 ? " - " : " + ");
  }
  if (monomial.empty()) {
    out << magnitude.get_str();
    return;
  }
  if (magnitude != 1) {
    if (magnitude.get_den() == 1)
      out << magnitude.get_str();
    else
      out << '(' << magnitude.get_str() << ')';
  }
  out << monomial;
}

std::string power_string(char variable, std::size_t power) {
  if (power == 0) return {};
  std::string s(1, variable);
  if (power > 1) s += '^' + std::to_string(power);
  return s;
}

}  // namespace

ExactPolynomial::ExactPolynomial(const Rational& constant) : c_{constant} { normalize(); }

ExactPolynomial::ExactPolynomial(std::vector<Rational> coefficients) : c_(std::move(coefficients)) {
  normalize();
}

ExactPolynomial ExactPolynomial::monomial(const Rational& c, std::size_t power) {
  std::vector<Rational> coeffs(power + 1);
  coeffs[power] = c;
  return ExactPolynomial(std::move(coeffs));
}

void ExactPolynomial::normalize() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

Rational ExactPolynomial::evaluate(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

ExactPolynomial ExactPolynomial::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rational> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<long>(i);
  return ExactPolynomial(std::move(d));
}

Rational ExactPolynomial::coefficient_sum() const {
  Rational s = 0;
  for (const auto& c : c_) s += c;
  return s;
}

ExactPolynomial& ExactPolynomial::operator+=(const ExactPolynomial& rhs) {
  if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size());
  for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] += rhs.c_[i];
  normalize();
  return *this;
}

ExactPolynomial& ExactPolynomial::operator-=(const ExactPolynomial& rhs) {
  if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size());
  for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] -= rhs.c_[i];
  normalize();
  return *this;
}

ExactPolynomial& ExactPolynomial::operator*=(const ExactPolynomial& rhs) { return *this = *this * rhs; }

ExactPolynomial& ExactPolynomial::operator*=(const Rational& rhs) {
  if (sgn(rhs) == 0) {
    c_.clear();
    return *this;
  }
  for (auto& c : c_) c *= rhs;
  return *this;
}

ExactPolynomial operator*(const ExactPolynomial& a, const ExactPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  // Integer convolution over a common denominator; one canonicalization per
  // output coefficient instead of one per term.
  const BigInt da = common_denominator(a.c_);
  const BigInt db = common_denominator(b.c_);
  const auto na = scaled_numerators(a.c_, da);
  const auto nb = scaled_numerators(b.c_, db);
  std::vector<BigInt> acc(na.size() + nb.size() - 1);
  for (std::size_t i = 0; i < na.size(); ++i) {
    if (sgn(na[i]) == 0) continue;
    for (std::size_t j = 0; j < nb.size(); ++j)
      mpz_addmul(acc[i + j].get_mpz_t(), na[i].get_mpz_t(), nb[j].get_mpz_t());
  }
  const BigInt denominator = da * db;
  std::vector<Rational> out(acc.size());
  for (std::size_t k = 0; k < acc.size(); ++k) {
    out[k] = Rational(acc[k], denominator);
    out[k].canonicalize();
  }
  return ExactPolynomial(std::move(out));
}

ExactPolynomial operator-(ExactPolynomial a) {
  for (auto& c : a.c_) c = -c;
  return a;
}

std::string ExactPolynomial::to_string(char variable) const {
  if (c_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (sgn(c_[i]) == 0) continue;
    append_term(out, c_[i], power_string(variable, i), first);
    first = false;
  }
  return out.str();
}

std::vector<Rational> shift_from_minus_one(std::span<const Rational> coefficients) {
  // Horner in x with the step "multiply by (x - 1)".
  std::vector<Rational> acc;
  for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) {
    acc.emplace_back(0);
    for (std::size_t i = acc.size() - 1; i > 0; --i) acc[i] = acc[i - 1] - acc[i];
    acc[0] = *it - acc[0];
  }
  return acc;
}

ExactBivariatePolynomial::ExactBivariatePolynomial(std::vector<ExactPolynomial> rows)
    : rows_(std::move(rows)) {
  while (!rows_.empty() && rows_.back().is_zero()) rows_.pop_back();
}

Rational ExactBivariatePolynomial::coefficient(std::size_t a, std::size_t b) const {
  return a < rows_.size() ? rows_[a][b] : Rational(0);
}

ExactPolynomial ExactBivariatePolynomial::at_p(const Rational& value) const {
  ExactPolynomial acc;
  for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) acc = acc * ExactPolynomial(value) + *it;
  return acc;
}

ExactPolynomial ExactBivariatePolynomial::at_q(const Rational& value) const {
  std::vector<Rational> coeffs;
  coeffs.reserve(rows_.size());
  for (const auto& row : rows_) coeffs.push_back(row.evaluate(value));
  return ExactPolynomial(std::move(coeffs));
}

Rational ExactBivariatePolynomial::mixed_derivative_at_one() const {
  Rational s = 0;
  for (std::size_t a = 1; a < rows_.size(); ++a) {
    const auto coeffs = rows_[a].coefficients();
    for (std::size_t b = 1; b < coeffs.size(); ++b) s += coeffs[b] * static_cast<long>(a * b);
  }
  return s;
}

Rational ExactBivariatePolynomial::coefficient_sum() const {
  Rational s = 0;
  for (const auto& row : rows_) s += row.coefficient_sum();
  return s;
}

std::string ExactBivariatePolynomial::to_string() const {
  if (rows_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t a = 0; a < rows_.size(); ++a) {
    const auto coeffs = rows_[a].coefficients();
    for (std::size_t b = 0; b < coeffs.size(); ++b) {
      if (sgn(coeffs[b]) == 0) continue;
      std::string monomial = power_string('p', a);
      monomial += power_string('q', b);
      append_term(out, coeffs[b], monomial, first);
      first = false;
    }
  }
  return out.str();
}

}  // namespace ncpart
