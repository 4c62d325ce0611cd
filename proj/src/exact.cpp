#include "ncpart/exact.hpp"

#include <cmath>
#include <string>

#include "ncpart/error.hpp"

namespace ncpart {

namespace {

void check_guard(const char* what, long value, long guard) {
  if (value > guard)
    throw GuardError(std::string(what) + ": " + std::to_string(value) + " exceeds the guard " +
                     std::to_string(guard) + " (raise it explicitly to proceed)");
}

void check_size_index(int n, int l) {
  if (n < 1 || l < 1 || l > n)
    throw DomainError("block size l must satisfy 1 <= l <= n (got n = " + std::to_string(n) +
                      ", l = " + std::to_string(l) + ")");
}

Rational power_of_two(unsigned long e) {
  BigInt p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, e);
  return Rational(p);
}

}  // namespace

BigInt binomial(long a, long b) {
  if (b < 0 || a < b) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
  return out;
}

BigInt negative_binomial_coefficient(long m, long r) {
  if (m < 0) return 0;
  if (r == 0) return m == 0 ? 1 : 0;
  return binomial(m + r - 1, m);
}

BigInt catalan(int n) {
  if (n < 0) throw DomainError("catalan needs n >= 0");
  BigInt c = binomial(2L * n, n);
  mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(n) + 1);
  return c;
}

Rational mean_blocks(int n) {
  if (n < 1) throw DomainError("mean_blocks needs n >= 1");
  return fraction(n + 1, 2);
}

Rational var_blocks_total(int n) {
  if (n < 1) throw DomainError("var_blocks_total needs n >= 1");
  const long nn = n;
  return fraction(BigInt(nn * nn - 1), BigInt(4 * (2 * nn - 1)));
}

Rational mean_blocks_of_size(int n, int l) {
  check_size_index(n, l);
  Rational product = Rational(n) / power_of_two(static_cast<unsigned long>(l) + 1);
  for (long j = 0; j <= l; ++j) product *= 1 + fraction(BigInt(2 - j), BigInt(2L * n - j));
  const Rational via_binomial = fraction(binomial(2L * n - l - 1, n - 1), catalan(n));
  if (product != via_binomial)
    throw InternalError("mean_blocks_of_size: product form " + product.get_str() +
                        " differs from binomial form " + via_binomial.get_str());
  return product;
}

Rational second_factorial_moment(int n, int l) {
  check_size_index(n, l);
  return fraction(BigInt(n) * binomial(2L * n - 2L * l - 2, n - 2L), catalan(n));
}

Rational variance_blocks_of_size(int n, int l) {
  const Rational mean = mean_blocks_of_size(n, l);
  return second_factorial_moment(n, l) + mean - mean * mean;
}

Rational cross_moment(int n, int k, int l) {
  check_size_index(n, k);
  check_size_index(n, l);
  if (k == l) throw DomainError("cross_moment needs k != l; use second_factorial_moment for k == l");
  return fraction(BigInt(n) * binomial(2L * n - k - l - 2, n - 2L), catalan(n));
}

Rational covariance(int n, int k, int l) {
  return cross_moment(n, k, l) - mean_blocks_of_size(n, k) * mean_blocks_of_size(n, l);
}

double asymptotic_var(int l, double n) {
  if (l < 1) throw DomainError("asymptotic_var needs l >= 1");
  const double bracket = std::ldexp(1.0, l + 2) - (l - 1.0) * (l - 1.0) - 2.0;
  return n * std::ldexp(1.0, -(2 * l + 3)) * bracket;
}

double asymptotic_cov(int k, int l, double n) {
  if (k < 1 || l < 1) throw DomainError("asymptotic_cov needs k, l >= 1");
  return -n * std::ldexp(1.0, -(k + l + 3)) * (2.0 + (k - 1.0) * (l - 1.0));
}

ExactPolynomial blocks_polynomial(int n, int l, int guard) {
  check_size_index(n, l);
  check_guard("blocks_polynomial n", n, guard);
  const long total = n + 1L;
  // Coefficients in t = q - 1 of [u^n] sum_j binom(N, j) t^j u^(lj) (1-u)^-(N-j).
  std::vector<Rational> in_t;
  for (long j = 0; j <= total && l * j <= n; ++j)
    in_t.emplace_back(binomial(total, j) * negative_binomial_coefficient(n - l * j, total - j));
  auto coeffs = shift_from_minus_one(in_t);
  for (auto& c : coeffs) c /= total;
  return ExactPolynomial(std::move(coeffs));
}

ExactBivariatePolynomial joint_polynomial(int n, int k, int l, int guard) {
  check_size_index(n, k);
  check_size_index(n, l);
  if (k == l) throw DomainError("joint_polynomial needs k != l");
  check_guard("joint_polynomial n", n, guard);
  const long total = n + 1L;
  // table[i][j]: coefficient of s^i t^j with s = p - 1, t = q - 1.
  std::vector<std::vector<Rational>> table;
  for (long i = 0; i <= total && k * i <= n; ++i) {
    std::vector<Rational> row;
    for (long j = 0; i + j <= total && k * i + l * j <= n; ++j) {
      row.emplace_back(binomial(total, i) * binomial(total - i, j) *
                       negative_binomial_coefficient(n - k * i - l * j, total - i - j));
    }
    table.push_back(shift_from_minus_one(row));
  }
  // Now table[i][b] is the coefficient of s^i q^b; shift each column in s.
  std::size_t width = 0;
  for (const auto& row : table) width = std::max(width, row.size());
  std::vector<std::vector<Rational>> by_p;
  for (std::size_t b = 0; b < width; ++b) {
    std::vector<Rational> column;
    for (const auto& row : table) column.push_back(b < row.size() ? row[b] : Rational(0));
    const auto shifted = shift_from_minus_one(column);
    if (by_p.size() < shifted.size()) by_p.resize(shifted.size());
    for (std::size_t a = 0; a < shifted.size(); ++a) {
      if (by_p[a].size() <= b) by_p[a].resize(b + 1);
      by_p[a][b] = shifted[a] / total;
    }
  }
  std::vector<ExactPolynomial> rows;
  rows.reserve(by_p.size());
  for (auto& r : by_p) rows.emplace_back(std::move(r));
  return ExactBivariatePolynomial(std::move(rows));
}

PolynomialSeries singleton_gf_series(int order, int guard) {
  if (order < 1) throw DomainError("singleton_gf_series needs order >= 1");
  check_guard("singleton_gf_series degree", order - 1L, guard);
  // One extra term: the numerator is divided by z.
  const auto work = static_cast<std::size_t>(order) + 1;
  const ExactPolynomial q = ExactPolynomial::monomial(1, 1);
  const ExactPolynomial one_minus_q = ExactPolynomial(1) - q;

  PolynomialSeries radicand(work);
  radicand[0] = 1;
  if (work > 1) radicand[1] = ExactPolynomial(-2) * (ExactPolynomial(1) + q);
  if (work > 2) radicand[2] = ExactPolynomial(std::vector<Rational>{-3, 2, 1});
  const PolynomialSeries root = radicand.sqrt();

  PolynomialSeries numerator(work);
  numerator[0] = 1;
  if (work > 1) numerator[1] = one_minus_q;
  numerator -= root;
  const PolynomialSeries reduced = numerator.divide_by_z(1);

  // Divide by 2(1 + (1-q)z): c_m = reduced_m / 2 - (1-q) c_(m-1).
  PolynomialSeries out(static_cast<std::size_t>(order));
  const Rational half(1, 2);
  for (std::size_t m = 0; m < out.order(); ++m) {
    ExactPolynomial value = reduced[m] * half;
    if (m > 0) value -= one_minus_q * out[m - 1];
    out[m] = std::move(value);
  }
  return out;
}

RationalSeries max_block_series(int k, int n_max, int guard) {
  if (k < 1) throw DomainError("max_block_series needs k >= 1");
  if (n_max < 0) throw DomainError("max_block_series needs n_max >= 0");
  check_guard("max_block_series n_max", n_max, guard);
  const auto size = static_cast<std::size_t>(n_max) + 1;
  std::vector<BigInt> y(size, 0);
  if (size > 1) y[1] = 1;
  // v = y / z and power = v^(k+1), by the power recurrence
  // j power_j = sum_{i=1}^{j} ((k+2) i - j) v_i power_(j-i).
  std::vector<BigInt> power{1};
  auto v = [&](std::size_t i) -> const BigInt& { return y[i + 1]; };
  BigInt acc;
  BigInt term;
  for (std::size_t m = 2; m < size; ++m) {
    const long j = static_cast<long>(m) - k - 2;
    while (j >= 0 && static_cast<long>(power.size()) <= j) {
      const std::size_t jj = power.size();
      acc = 0;
      for (std::size_t i = 1; i <= jj; ++i) {
        const long weight = static_cast<long>((k + 2) * i) - static_cast<long>(jj);
        if (weight == 0) continue;
        term = v(i) * power[jj - i];
        if (weight > 0)
          mpz_addmul_ui(acc.get_mpz_t(), term.get_mpz_t(), static_cast<unsigned long>(weight));
        else
          mpz_submul_ui(acc.get_mpz_t(), term.get_mpz_t(), static_cast<unsigned long>(-weight));
      }
      mpz_divexact_ui(acc.get_mpz_t(), acc.get_mpz_t(), jj);
      power.push_back(acc);
    }
    // y_m = [z^m] y^2 - [z^(m-1)] z^(k+1) v^(k+1)
    acc = 0;
    for (std::size_t i = 1; 2 * i < m; ++i) mpz_addmul(acc.get_mpz_t(), y[i].get_mpz_t(), y[m - i].get_mpz_t());
    acc *= 2;
    if (m % 2 == 0) mpz_addmul(acc.get_mpz_t(), y[m / 2].get_mpz_t(), y[m / 2].get_mpz_t());
    if (j >= 0) acc -= power[static_cast<std::size_t>(j)];
    y[m] = acc;
  }
  std::vector<Rational> coeffs(y.begin(), y.end());
  return RationalSeries(std::move(coeffs), size);
}

BigInt count_max_block_at_most(int n, int k) {
  if (n < 0 || k < 1) throw DomainError("count_max_block_at_most needs n >= 0 and k >= 1");
  const unsigned long m = n + 1UL;
  const unsigned long r = m - 1;
  // Both binomials are updated in place from one term to the next.
  BigInt outer = 1;                     // binom(m, i)
  unsigned long top = 2 * m - 2;        // 2m - 2 - (k+1) i
  BigInt inner = binomial(static_cast<long>(top), static_cast<long>(r));
  BigInt sum = 0;
  for (unsigned long i = 0;; ++i) {
    if (i % 2 == 0)
      mpz_addmul(sum.get_mpz_t(), outer.get_mpz_t(), inner.get_mpz_t());
    else
      mpz_submul(sum.get_mpz_t(), outer.get_mpz_t(), inner.get_mpz_t());
    if (top < r + k + 1 || i + 1 > m) break;
    mpz_mul_ui(outer.get_mpz_t(), outer.get_mpz_t(), m - i);
    mpz_divexact_ui(outer.get_mpz_t(), outer.get_mpz_t(), i + 1);
    // binom(N - 1, r) = binom(N, r) (N - r) / N
    for (int step = 0; step <= k; ++step, --top) {
      mpz_mul_ui(inner.get_mpz_t(), inner.get_mpz_t(), top - r);
      mpz_divexact_ui(inner.get_mpz_t(), inner.get_mpz_t(), top);
    }
  }
  mpz_divexact_ui(sum.get_mpz_t(), sum.get_mpz_t(), m);
  return sum;
}

Rational largest_block_cdf_exact(int n, int k, int guard) {
  if (n < 1 || k < 1 || k > n)
    throw DomainError("largest_block_cdf_exact needs 1 <= k <= n (got n = " + std::to_string(n) +
                      ", k = " + std::to_string(k) + ")");
  check_guard("largest_block_cdf_exact n", n, guard);
  if (k == n) return 1;
  return fraction(count_max_block_at_most(n, k), catalan(n));
}

Rational lagrange_coefficient(const RationalSeries& phi, int n) {
  if (n < 1) throw DomainError("lagrange_coefficient needs n >= 1");
  if (phi.order() < static_cast<std::size_t>(n))
    throw DomainError("phi is known only to order " + std::to_string(phi.order()) + ", need " +
                      std::to_string(n));
  if (sgn(phi[0]) == 0) throw DomainError("lagrange_coefficient needs phi(0) != 0");
  const auto power = phi.truncated(static_cast<std::size_t>(n)).pow(Rational(n));
  return power[static_cast<std::size_t>(n) - 1] / n;
}

}  // namespace ncpart
