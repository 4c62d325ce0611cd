#include "ncpart/limitlaws.hpp"

#include <gmpxx.h>

#include <array>
#include <bit>
#include <cmath>
#include <numbers>
#include <sstream>

#include "ncpart/error.hpp"
#include "ncpart/exact.hpp"

namespace ncpart {

namespace {

using HP = HighPrecision;

const HP kSolveTolerance("1e-42");
constexpr int kMaxNewton = 200;

HP ipow(const HP& x, int e) {
  if (e <= 0) return HP(1);
  return boost::multiprecision::pow(x, e);
}

// Newton for a 2x2 system; eval fills F and J at (z, y).
template <class Eval>
int newton2(HP& z, HP& y, Eval eval, const char* what, std::ostringstream& trace) {
  std::array<HP, 2> f;
  std::array<HP, 4> jac;
  for (int it = 1; it <= kMaxNewton; ++it) {
    eval(z, y, f, jac);
    const HP det = jac[0] * jac[3] - jac[1] * jac[2];
    if (det == 0) {
      trace << what << ": singular Jacobian at iteration " << it;
      throw SolverError(trace.str());
    }
    const HP dz = (f[0] * jac[3] - f[1] * jac[1]) / det;
    const HP dy = (jac[0] * f[1] - jac[2] * f[0]) / det;
    z -= dz;
    y -= dy;
    trace << "  it " << it << ": z = " << z.str(20) << ", y = " << y.str(20) << ", |step| = "
          << (abs(dz) + abs(dy)).str(3) << '\n';
    if (abs(dz) + abs(dy) < kSolveTolerance) return it;
  }
  throw SolverError(std::string(what) + ": no convergence after " + std::to_string(kMaxNewton) +
                    " iterations\n" + trace.str());
}

void check_trust_region(int l, const HP& q) {
  if (l < 1) throw DomainError("movement function needs l >= 1");
  if (abs(q - 1) > HP("0.2")) throw DomainError("q outside the trust region |q - 1| <= 0.2");
}

}  // namespace

double std_normal_cdf(double x) { return 0.5 * std::erfc(-x / std::numbers::sqrt2); }

double theta_tail(double x) {
  if (!(x > 0)) throw DomainError("theta_tail needs x > 0");
  if (x < 1) return 1.0 - theta_complement(x);
  const double x2 = x * x;
  double sum = 0;
  for (int j = 1;; ++j) {
    const double jx2 = j * j * x2;
    const double term = std::exp(-jx2) * (4 * jx2 - 2);
    sum += term;
    if (std::abs(term) < 1e-15 && jx2 > 1) break;
  }
  return sum;
}

double theta_complement(double x) {
  if (!(x > 0)) throw DomainError("theta_complement needs x > 0");
  if (x >= 2) return 1.0 - theta_tail(x);
  const double pi2 = std::numbers::pi * std::numbers::pi;
  const double a = pi2 / (x * x);
  double sum = 0;
  for (int j = 1;; ++j) {
    const double term = double(j) * j * std::exp(-a * j * j);
    sum += term;
    if (term < 1e-18 * sum || term == 0) break;
  }
  return 4 * std::pow(std::numbers::pi, 2.5) / (x * x * x) * sum;
}

double width_moment(int r, double n) {
  if (r < 2) throw DomainError("width_moment needs r >= 2");
  return r * (r - 1.0) * std::tgamma(r / 2.0) * std::riemann_zeta(r) * std::pow(std::sqrt(n) / 2, r);
}

double mean_width_asymptotic(double n) {
  if (n < 1) throw DomainError("mean_width_asymptotic needs n >= 1");
  return 0.5 * std::sqrt(std::numbers::pi * n) - 0.75;
}

double largest_block_cdf_approx(long n, int k) {
  if (n < 2 || k < 1) throw DomainError("largest_block_cdf_approx needs n >= 2 and k >= 1");
  const int floor_log = std::bit_width(static_cast<unsigned long>(n)) - 1;
  const double alpha = std::exp2(std::log2(static_cast<double>(n)) - floor_log);
  const int x = k - floor_log;
  return std::exp(-alpha * std::exp2(-(x + 1.0)));
}

SingularityReport solve_characteristic_maxblock(int k) {
  if (k < 1) throw DomainError("solve_characteristic_maxblock needs k >= 1");
  SingularityReport r;
  r.k = k;
  HP z("0.25");
  HP y("0.5");
  std::ostringstream trace;
  trace << "characteristic system, k = " << k << '\n';
  auto eval = [k](const HP& z, const HP& y, std::array<HP, 2>& f, std::array<HP, 4>& jac) {
    const HP yk1 = ipow(y, k - 1);
    const HP yk = yk1 * y;
    const HP yk_1 = yk * y;
    f[0] = z + y * y - z * yk_1 - y;
    f[1] = 2 * y - (k + 1) * z * yk - 1;
    jac[0] = 1 - yk_1;
    jac[1] = f[1];
    jac[2] = -(k + 1) * yk;
    jac[3] = 2 - HP(k) * (k + 1) * z * yk1;
  };
  r.iterations = newton2(z, y, eval, "solve_characteristic_maxblock", trace);
  std::array<HP, 2> f;
  std::array<HP, 4> jac;
  eval(z, y, f, jac);
  r.z0 = z;
  r.y0 = y;
  r.residual_equation = abs(f[0]);
  r.residual_derivative = abs(f[1]);
  const HP pz = jac[0];
  const HP pyy = jac[3];
  if (pz <= 0 || pyy <= 0)
    r.gamma = 0;
  else
    r.gamma = sqrt(2 * z * pz / pyy);
  return r;
}

HighPrecision rho_of_q(int l, const HighPrecision& q) {
  check_trust_region(l, q);
  if (q == 1) return HP("0.25");
  const HP t = q - 1;
  HP s("0.5");
  std::ostringstream trace;
  int it = 0;
  for (;; ++it) {
    if (it == kMaxNewton)
      throw SolverError("rho_of_q: no convergence for l = " + std::to_string(l) + "\n" + trace.str());
    const HP sl1 = ipow(s, l - 1);
    const HP sl = sl1 * s;
    const HP bracket = (l - 1) * (1 - s * s) + 2 * s;
    const HP g = -1 + 2 * s + t * sl * bracket;
    const HP dg = 2 + t * (l * sl1 * bracket + sl * (2 - 2 * (l - 1) * s));
    const HP step = g / dg;
    s -= step;
    trace << "  it " << it << ": s = " << s.str(20) << '\n';
    if (abs(step) < kSolveTolerance) break;
  }
  const HP z = (1 - 2 * s) / (t * (l + (l + 1) * s) * ipow(s, l - 1));
  // Residuals of the unreduced system.
  const HP sl = ipow(s, l);
  const HP r1 = s * s + z + (sl + sl * s) * t * z - s;
  const HP r2 = 2 * s + t * z * (l * ipow(s, l - 1) + (l + 1) * sl) - 1;
  if (abs(r1) > HP("1e-35") || abs(r2) > HP("1e-35"))
    throw SolverError("rho_of_q: residuals too large after elimination\n" + trace.str());
  return z;
}

double rho_of_q(int l, double q) { return static_cast<double>(rho_of_q(l, HP(q))); }

HighPrecision block_rho_of_q(int l, const HighPrecision& q) {
  check_trust_region(l, q);
  if (q == 1) return HP("0.25");
  const HP t = q - 1;
  HP z("0.25");
  HP y("0.5");
  std::ostringstream trace;
  auto eval = [l, &t](const HP& z, const HP& y, std::array<HP, 2>& f, std::array<HP, 4>& jac) {
    const HP yl1 = ipow(y, l - 1);
    const HP yl = yl1 * y;
    const HP marker = yl - yl * y;
    const HP dmarker = l * yl1 - (l + 1) * yl;
    const HP ddmarker = (l >= 2 ? HP(l) * (l - 1) * ipow(y, l - 2) : HP(0)) - HP(l + 1) * l * yl1;
    f[0] = y * y + z + t * z * marker - y;
    f[1] = 2 * y + t * z * dmarker - 1;
    jac[0] = 1 + t * marker;
    jac[1] = f[1];
    jac[2] = t * dmarker;
    jac[3] = 2 + t * z * ddmarker;
  };
  newton2(z, y, eval, "block_rho_of_q", trace);
  return z;
}

double block_rho_of_q(int l, double q) { return static_cast<double>(block_rho_of_q(l, HP(q))); }

MovementDerivatives movement_derivatives(int l, MarkerForm form) {
  auto rho = [&](const HP& q) { return form == MarkerForm::Plus ? rho_of_q(l, q) : block_rho_of_q(l, q); };
  const HP h("1e-4");
  const HP r0 = rho(HP(1));
  auto d1 = [&](const HP& step) { return (rho(1 + step) - rho(1 - step)) / (2 * step); };
  auto d2 = [&](const HP& step) { return (rho(1 + step) - 2 * r0 + rho(1 - step)) / (step * step); };
  const HP first = (4 * d1(h / 2) - d1(h)) / 3;
  const HP second = (4 * d2(h / 2) - d2(h)) / 3;
  MovementDerivatives out;
  out.rho = static_cast<double>(r0);
  out.first = static_cast<double>(first);
  out.second = static_cast<double>(second);
  const HP ratio = first / r0;
  out.variability = static_cast<double>(ratio * ratio - second / r0 - ratio);
  return out;
}

AsymptoticCountReport asymptotic_count_check(int k, int n) {
  if (k < 1 || n < 3) throw DomainError("asymptotic_count_check needs k >= 1 and n >= 3");
  const RationalSeries y = max_block_series(k, n + 1);
  auto log_of = [](const Rational& c) {
    long e = 0;
    const double mant = mpz_get_d_2exp(&e, c.get_num_mpz_t());
    return std::log(mant) + static_cast<double>(e) * std::numbers::ln2;
  };
  auto log_ratio = [](const Rational& a, const Rational& b) {
    Rational q = a / b;
    return std::log(q.get_d());
  };
  const auto m = static_cast<std::size_t>(n);
  const double r1 = log_ratio(y[m], y[m - 1]);
  const double r2 = log_ratio(y[m + 1], y[m]);
  const double dn = n;
  const double g1 = std::log1p(1 / (dn - 1));
  const double g2 = std::log1p(1 / dn);
  AsymptoticCountReport out;
  out.k = k;
  out.n = n;
  out.fitted_exponent = (r2 - r1) / (g2 - g1);
  const double log_rate = r2 - out.fitted_exponent * g2;
  out.fitted_rate = std::exp(log_rate);
  out.fitted_constant = std::exp(log_of(y[m]) - out.fitted_exponent * std::log(dn) - dn * log_rate);
  if (k >= n) {
    out.expected_rate = 4;
    out.transfer_constant = 0;
  } else {
    const SingularityReport s = solve_characteristic_maxblock(k);
    out.expected_rate = static_cast<double>(1 / s.z0);
    out.transfer_constant = static_cast<double>(s.gamma) / (2 * std::sqrt(std::numbers::pi));
  }
  out.rate_relative_error = std::abs(out.fitted_rate - out.expected_rate) / out.expected_rate;
  return out;
}

}  // namespace ncpart
