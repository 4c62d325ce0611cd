#pragma once

#include "ncpart/polynomial.hpp"
#include "ncpart/series.hpp"

namespace ncpart {

/// Default size guards; callers (the CLI) may pass larger ones.
inline constexpr int kPolynomialGuard = 200;
inline constexpr int kMaxBlockSeriesGuard = 4096;

/// binom(a, b), zero when b < 0 or a < b (so negative a gives zero too).
BigInt binomial(long a, long b);

/// [u^m] (1 - u)^{-r} for r >= 0: binom(m + r - 1, m), with [u^0] 1 = 1.
BigInt negative_binomial_coefficient(long m, long r);

/// C_n = binom(2n, n) / (n + 1).
BigInt catalan(int n);

// Number of blocks X_n of a uniform NC partition of [n].
Rational mean_blocks(int n);
Rational var_blocks_total(int n);

/// E X_n^(l) for blocks of size l: the product form
/// n / 2^(l+1) * prod_{j=0}^{l} (1 + (2 - j) / (2n - j)), checked against
/// binom(2n - l - 1, n - 1) / C_n. Throws InternalError if they differ.
Rational mean_blocks_of_size(int n, int l);

/// E[X(X - 1)] = n binom(2n - 2l - 2, n - 2) / C_n.
Rational second_factorial_moment(int n, int l);

/// Var X_n^(l) = second factorial moment + mean - mean^2.
Rational variance_blocks_of_size(int n, int l);

/// E[X^(k) X^(l)] = n binom(2n - k - l - 2, n - 2) / C_n for k != l.
/// Throws DomainError when k == l.
Rational cross_moment(int n, int k, int l);
Rational covariance(int n, int k, int l);

/// Leading terms n / 2^(2l+3) [2^(l+2) - (l-1)^2 - 2] and
/// -n / 2^(k+l+3) [2 + (k-1)(l-1)].
double asymptotic_var(int l, double n);
double asymptotic_cov(int k, int l, double n);

/// Polynomial in q whose q^j coefficient counts NC partitions of [n] with
/// exactly j blocks of size l: (1/(n+1)) [u^n] (1/(1-u) + u^l (q-1))^(n+1),
/// expanded with the binomial theorem.
ExactPolynomial blocks_polynomial(int n, int l, int guard = kPolynomialGuard);

/// Coefficient of p^a q^b counts NC partitions of [n] with a blocks of size k
/// and b blocks of size l: (1/(n+1)) [u^n] (1/(1-u) + u^k (p-1) + u^l (q-1))^(n+1).
ExactBivariatePolynomial joint_polynomial(int n, int k, int l, int guard = kPolynomialGuard);

/// Taylor coefficients (z^0 .. z^(order-1)) of the singleton generating
/// function [1 + (1-q)z - sqrt(1 - 2(1+q)z + (q^2+2q-3)z^2)] / [2z(1 + (1-q)z)]
/// in exact series arithmetic.
PolynomialSeries singleton_gf_series(int order, int guard = kPolynomialGuard);

/// y(z) = z C^(k)(z) with coefficients y_0..y_(n_max), solved degree by
/// degree from the fixed point y = z + y^2 - z y^(k+1). y_(n+1) counts NC
/// partitions of [n] whose blocks all have size <= k.
RationalSeries max_block_series(int k, int n_max, int guard = kMaxBlockSeriesGuard);

/// Number of NC partitions of [n] with every block of size <= k, from the
/// Lagrange inversion closed form
/// (1/m) sum_i (-1)^i binom(m, i) binom(2m - 2 - (k+1)i, m - 1), m = n + 1.
BigInt count_max_block_at_most(int n, int k);

/// P[L_n <= k] = [z^(n+1)] y / C_n, exact.
Rational largest_block_cdf_exact(int n, int k, int guard = kMaxBlockSeriesGuard);

/// g_n = (1/n) [u^(n-1)] phi(u)^n, the coefficients of the compositional
/// inverse of z = u / phi(u). phi must have a nonzero constant term and at
/// least n known coefficients.
Rational lagrange_coefficient(const RationalSeries& phi, int n);

}  // namespace ncpart
