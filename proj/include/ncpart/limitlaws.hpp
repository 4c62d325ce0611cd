#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <string>

namespace ncpart {

/// 50 significant decimal digits; used wherever 2^-k effects must survive
/// next to O(1) quantities.
using HighPrecision = boost::multiprecision::cpp_bin_float_50;

/// Standard normal distribution function.
double std_normal_cdf(double x);

/// Theta(x) = sum_{j>=1} exp(-j^2 x^2) (4 j^2 x^2 - 2), the limiting tail
/// P(W_n >= x sqrt(n) / 2). Defined for x > 0; the convergence statement is
/// uniform only on windows 0 < alpha < x < beta, which is a property of the
/// limit, not of this function. Throws DomainError for x <= 0.
double theta_tail(double x);

/// 1 - Theta(x), accurate also where Theta(x) rounds to 1. Uses the
/// theta-function dual form (4 pi^(5/2) / x^3) sum_{j>=1} j^2 exp(-pi^2 j^2 / x^2)
/// for x < 2.
double theta_complement(double x);

/// r (r - 1) Gamma(r/2) zeta(r) (sqrt(n)/2)^r for integer r >= 2.
double width_moment(int r, double n);

/// sqrt(pi n) / 2 - 3/4.
double mean_width_asymptotic(double n);

/// exp(-alpha(n) 2^-(x+1)) with x = k - floor(log2 n) and
/// alpha(n) = 2^{frac(log2 n)} in [1, 2). Needs n >= 2, k >= 1.
double largest_block_cdf_approx(long n, int k);

/// Solution (z0, y0) of the characteristic system of y = z + y^2 - z y^(k+1):
///   y = z + y^2 - z y^(k+1),   1 = 2y - (k+1) z y^k,
/// with gamma = sqrt(2 z0 P_z / P_yy).
struct SingularityReport {
  int k = 0;
  HighPrecision z0;
  HighPrecision y0;
  HighPrecision gamma;
  HighPrecision residual_equation;    // |z + y^2 - z y^(k+1) - y|
  HighPrecision residual_derivative;  // |2y - (k+1) z y^k - 1|
  int iterations = 0;
};

/// Newton's method from (z, y) = (1/4, 1/2). For k = 1 and k = 2 the system's
/// only nearby solution has y0 = 1, where P_z vanishes and gamma is reported
/// as 0 (k = 1 is rational, k = 2 gives the Motzkin singularity z0 = 1/3).
/// Throws DomainError for k < 1 and SolverError, with the iteration trace, on
/// non-convergence.
SingularityReport solve_characteristic_maxblock(int k);

/// Singularity movement function for the marked characteristic function
/// Phi(z, y; q) = y^2 + z + (y^l + y^(l+1)) (q - 1) z. For q != 1 it solves
/// -1 + 2s + (q-1) s^l [(l-1)(1 - s^2) + 2s] = 0 for s near 1/2 and returns
/// z = (1 - 2s) / ((q-1) [l + (l+1)s] s^(l-1)); rho(1) = 1/4.
/// Needs l >= 1 and |q - 1| <= 0.2.
HighPrecision rho_of_q(int l, const HighPrecision& q);
double rho_of_q(int l, double q);

/// Same construction for Phi(z, y; q) = y^2 + z + (y^l - y^(l+1)) (q - 1) z,
/// which is what H = zC satisfies when C = 1/(1 - zC) + (q - 1)(zC)^l. Solves
/// the two-equation system directly with Newton's method.
HighPrecision block_rho_of_q(int l, const HighPrecision& q);
double block_rho_of_q(int l, double q);

enum class MarkerForm { Plus, Minus };

/// Derivatives of rho(q) at q = 1 by central differences (h = 1e-4) with
/// one Richardson step, and the variability
/// V = (rho'/rho)^2 - rho''/rho - rho'/rho of rho(1)/rho(q).
struct MovementDerivatives {
  double rho = 0;
  double first = 0;
  double second = 0;
  double variability = 0;
};
MovementDerivatives movement_derivatives(int l, MarkerForm form);

/// Fit of c_m ~ C m^beta R^m to three consecutive exact coefficients
/// y_(n-1), y_n, y_(n+1) of max_block_series(k).
struct AsymptoticCountReport {
  int k = 0;
  int n = 0;
  double fitted_rate = 0;
  double expected_rate = 0;  // 1 / z0, or 4 when k >= n
  double rate_relative_error = 0;
  double fitted_exponent = 0;
  double fitted_constant = 0;
  double transfer_constant = 0;  // gamma / (2 sqrt(pi)); 0 when k >= n
};
AsymptoticCountReport asymptotic_count_check(int k, int n);

}  // namespace ncpart
