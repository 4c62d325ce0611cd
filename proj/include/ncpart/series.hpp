#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "ncpart/error.hpp"
#include "ncpart/polynomial.hpp"

namespace ncpart {

namespace series_detail {

inline Rational unit_value(const Rational& c) { return c; }

/// A coefficient in Q[q] is a unit only when it is a nonzero constant.
inline Rational unit_value(const ExactPolynomial& c) {
  if (!c.is_constant()) throw DomainError("series constant term is not a constant polynomial");
  return c[0];
}

inline bool is_zero(const Rational& c) { return sgn(c) == 0; }
inline bool is_zero(const ExactPolynomial& c) { return c.is_zero(); }

}  // namespace series_detail

/// Truncated power series sum_{i < order} c_i z^i + O(z^order) with exact
/// coefficients in Q (Coeff = Rational) or Q[q] (Coeff = ExactPolynomial).
/// The truncation order is explicit and propagates: binary operations keep the
/// smaller order.
template <class Coeff>
class ExactSeries {
 public:
  ExactSeries() = default;
  explicit ExactSeries(std::size_t order) : c_(order) {}
  ExactSeries(std::vector<Coeff> coefficients, std::size_t order) : c_(std::move(coefficients)) {
    c_.resize(order);
  }

  std::size_t order() const noexcept { return c_.size(); }
  const Coeff& operator[](std::size_t i) const { return c_.at(i); }
  Coeff& operator[](std::size_t i) { return c_.at(i); }
  const std::vector<Coeff>& coefficients() const noexcept { return c_; }

  ExactSeries truncated(std::size_t order) const {
    ExactSeries out(std::min(order, this->order()));
    std::copy_n(c_.begin(), out.order(), out.c_.begin());
    return out;
  }

  ExactSeries& operator+=(const ExactSeries& rhs) {
    c_.resize(std::min(order(), rhs.order()));
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += rhs.c_[i];
    return *this;
  }
  ExactSeries& operator-=(const ExactSeries& rhs) {
    c_.resize(std::min(order(), rhs.order()));
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= rhs.c_[i];
    return *this;
  }
  ExactSeries& operator*=(const Rational& s) {
    for (auto& c : c_) c *= s;
    return *this;
  }
  friend ExactSeries operator+(ExactSeries a, const ExactSeries& b) { return a += b; }
  friend ExactSeries operator-(ExactSeries a, const ExactSeries& b) { return a -= b; }
  friend ExactSeries operator*(ExactSeries a, const Rational& s) { return a *= s; }

  friend ExactSeries operator*(const ExactSeries& a, const ExactSeries& b) {
    ExactSeries out(std::min(a.order(), b.order()));
    for (std::size_t i = 0; i < out.order(); ++i) {
      if (series_detail::is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; i + j < out.order(); ++j) out.c_[i + j] += a.c_[i] * b.c_[j];
    }
    return out;
  }

  /// Multiplicative inverse; the constant term must be a nonzero constant.
  ExactSeries inverse() const {
    require_unit_constant("inverse");
    const Rational inv0 = 1 / series_detail::unit_value(c_[0]);
    ExactSeries out(order());
    out.c_[0] = Coeff(inv0);
    for (std::size_t m = 1; m < order(); ++m) {
      Coeff acc{};
      for (std::size_t i = 1; i <= m; ++i) acc += c_[i] * out.c_[m - i];
      out.c_[m] = acc * Rational(-inv0);
    }
    return out;
  }

  /// Square root with constant term 1, solved degree by degree from
  /// s^2 = f: s_m = (f_m - sum_{0<i<m} s_i s_{m-i}) / 2.
  ExactSeries sqrt() const {
    if (order() == 0) return *this;
    if (series_detail::unit_value(c_[0]) != 1) throw DomainError("series sqrt needs constant term 1");
    ExactSeries out(order());
    out.c_[0] = Coeff(Rational(1));
    const Rational half(1, 2);
    for (std::size_t m = 1; m < order(); ++m) {
      Coeff cross{};
      for (std::size_t i = 1; 2 * i < m; ++i) cross += out.c_[i] * out.c_[m - i];
      cross += cross;
      if (m % 2 == 0 && m >= 2) cross += out.c_[m / 2] * out.c_[m / 2];
      Coeff value = c_[m];
      value -= cross;
      out.c_[m] = value * half;
    }
    return out;
  }

  /// f^exponent for any rational exponent by the power recurrence
  /// m f_0 w_m = sum_{i=1}^{m} ((exponent + 1) i - m) f_i w_{m-i}.
  /// The constant term must be 1 unless the exponent is a nonnegative integer.
  ExactSeries pow(const Rational& exponent) const {
    if (order() == 0) return *this;
    require_unit_constant("pow");
    const Rational f0 = series_detail::unit_value(c_[0]);
    ExactSeries out(order());
    if (exponent.get_den() == 1 && exponent.get_num().fits_slong_p()) {
      Rational w0 = 1;
      const long e = exponent.get_num().get_si();
      Rational base = e >= 0 ? f0 : 1 / f0;
      for (long i = 0; i < (e >= 0 ? e : -e); ++i) w0 *= base;
      out.c_[0] = Coeff(w0);
    } else if (f0 == 1) {
      out.c_[0] = Coeff(Rational(1));
    } else {
      throw DomainError("non-integer series power needs constant term 1");
    }
    for (std::size_t m = 1; m < order(); ++m) {
      Coeff acc{};
      for (std::size_t i = 1; i <= m; ++i) {
        const Rational weight = (exponent + 1) * static_cast<long>(i) - static_cast<long>(m);
        if (sgn(weight) == 0 || series_detail::is_zero(c_[i])) continue;
        acc += (c_[i] * out.c_[m - i]) * weight;
      }
      out.c_[m] = acc * Rational(1 / (f0 * static_cast<long>(m)));
    }
    return out;
  }

  /// Divides by z^k; the first k coefficients must vanish. Order drops by k.
  ExactSeries divide_by_z(std::size_t k) const {
    if (k > order()) throw DomainError("cannot divide by a power of z beyond the truncation order");
    for (std::size_t i = 0; i < k; ++i)
      if (!series_detail::is_zero(c_[i])) throw DomainError("series is not divisible by z^" + std::to_string(k));
    return ExactSeries(std::vector<Coeff>(c_.begin() + static_cast<std::ptrdiff_t>(k), c_.end()), order() - k);
  }

  friend bool operator==(const ExactSeries&, const ExactSeries&) = default;

 private:
  void require_unit_constant(const char* what) const {
    if (order() == 0) return;
    if (series_detail::is_zero(c_[0]) || sgn(series_detail::unit_value(c_[0])) == 0)
      throw DomainError(std::string("series ") + what + " needs a nonzero constant term");
  }

  std::vector<Coeff> c_;
};

using RationalSeries = ExactSeries<Rational>;
using PolynomialSeries = ExactSeries<ExactPolynomial>;

}  // namespace ncpart
