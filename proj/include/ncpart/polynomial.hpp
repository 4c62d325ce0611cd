#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace ncpart {

using BigInt = mpz_class;
using Rational = mpq_class;

/// num / den in lowest terms (the two-argument mpq_class constructor does
/// not canonicalize).
inline Rational fraction(const BigInt& num, const BigInt& den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

/// Dense univariate polynomial with exact rational coefficients; index is the
/// power. Trailing zeros are always stripped, so the zero polynomial has no
/// coefficients and degree -1.
class ExactPolynomial {
 public:
  ExactPolynomial() = default;
  ExactPolynomial(const Rational& constant);  // NOLINT(google-explicit-constructor)
  ExactPolynomial(long constant) : ExactPolynomial(Rational(constant)) {}  // NOLINT
  explicit ExactPolynomial(std::vector<Rational> coefficients);

  static ExactPolynomial monomial(const Rational& c, std::size_t power);

  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  bool is_constant() const noexcept { return c_.size() <= 1; }

  /// Coefficient of x^i, zero past the degree.
  Rational operator[](std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
  std::span<const Rational> coefficients() const noexcept { return c_; }

  Rational evaluate(const Rational& x) const;
  ExactPolynomial derivative() const;
  /// Sum of coefficients, i.e. the value at 1.
  Rational coefficient_sum() const;

  ExactPolynomial& operator+=(const ExactPolynomial& rhs);
  ExactPolynomial& operator-=(const ExactPolynomial& rhs);
  ExactPolynomial& operator*=(const ExactPolynomial& rhs);
  ExactPolynomial& operator*=(const Rational& rhs);

  friend ExactPolynomial operator+(ExactPolynomial a, const ExactPolynomial& b) { return a += b; }
  friend ExactPolynomial operator-(ExactPolynomial a, const ExactPolynomial& b) { return a -= b; }
  friend ExactPolynomial operator*(const ExactPolynomial& a, const ExactPolynomial& b);
  friend ExactPolynomial operator*(ExactPolynomial a, const Rational& b) { return a *= b; }
  friend ExactPolynomial operator-(ExactPolynomial a);

  friend bool operator==(const ExactPolynomial& a, const ExactPolynomial& b) { return a.c_ == b.c_; }

  /// e.g. "1 + 3q + q^3".
  std::string to_string(char variable = 'q') const;

 private:
  void normalize();
  std::vector<Rational> c_;
};

/// Polynomial in two variables p, q stored as rows: row a is the coefficient
/// of p^a, itself a polynomial in q.
class ExactBivariatePolynomial {
 public:
  ExactBivariatePolynomial() = default;
  explicit ExactBivariatePolynomial(std::vector<ExactPolynomial> rows);

  Rational coefficient(std::size_t a, std::size_t b) const;
  std::span<const ExactPolynomial> rows() const noexcept { return rows_; }
  int degree_p() const noexcept { return static_cast<int>(rows_.size()) - 1; }

  /// Substitute p = value; the result is a polynomial in q.
  ExactPolynomial at_p(const Rational& value) const;
  /// Substitute q = value; the result is a polynomial in p.
  ExactPolynomial at_q(const Rational& value) const;
  /// d^2/(dp dq) evaluated at p = q = 1.
  Rational mixed_derivative_at_one() const;
  Rational coefficient_sum() const;

  friend bool operator==(const ExactBivariatePolynomial&, const ExactBivariatePolynomial&) = default;

  std::string to_string() const;

 private:
  std::vector<ExactPolynomial> rows_;
};

/// Re-expands sum_j a_j (x - 1)^j in powers of x.
std::vector<Rational> shift_from_minus_one(std::span<const Rational> coefficients);

}  // namespace ncpart
