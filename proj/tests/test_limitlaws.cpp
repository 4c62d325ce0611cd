#include "doctest.h"
#include "oracles.hpp"

#include <cmath>
#include <numbers>

#include "ncpart/error.hpp"
#include "ncpart/exact.hpp"
#include "ncpart/limitlaws.hpp"

using namespace ncpart;

TEST_SUITE("limitlaws") {

TEST_CASE("normal CDF") {
  CHECK(std_normal_cdf(0) == 0.5);
  CHECK(std_normal_cdf(1.959964) == doctest::Approx(0.975).epsilon(1e-6));
  for (double x = -8; x <= 8; x += 0.125) {
    CHECK(std::abs(std_normal_cdf(x) - (1 - std_normal_cdf(-x))) < 1e-15);
    CHECK(std::abs(std_normal_cdf(x) - oracle::normal_cdf(x)) < 1e-12);
  }
}

TEST_CASE("theta tail") {
  CHECK(theta_tail(1) == doctest::Approx(0.99639).epsilon(1e-5));
  CHECK(theta_tail(6) < 1e-12);
  CHECK(theta_tail(0.5) <= 1);
  CHECK(theta_tail(0.5) >= theta_tail(1));
  CHECK_THROWS_AS(theta_tail(0), DomainError);
  CHECK_THROWS_AS(theta_tail(-1), DomainError);
  // Where Theta rounds to 1 in double, strictness is checked on the complement.
  double prev = 2;
  double prev_complement = -1;
  for (double x = 0.3; x <= 6.0 + 1e-9; x += 0.05) {
    const double t = theta_tail(x);
    const double c = theta_complement(x);
    CHECK(t >= 0);
    CHECK(t <= 1);
    if (t < 1) CHECK(t < prev);
    else CHECK(c > prev_complement);
    prev = t;
    prev_complement = c;
    if (x >= 0.7) CHECK(std::abs(t - oracle::theta_direct(x)) < 1e-12);
    CHECK(std::abs(theta_tail(x) + theta_complement(x) - 1) < 1e-14);
  }
}

TEST_CASE("width moments") {
  CHECK(std::riemann_zeta(2.0) == doctest::Approx(std::numbers::pi * std::numbers::pi / 6).epsilon(1e-12));
  CHECK(width_moment(2, 4) == doctest::Approx(std::numbers::pi * std::numbers::pi / 3).epsilon(1e-10));
  CHECK(width_moment(3, 4) == doctest::Approx(6 * std::sqrt(std::numbers::pi) / 2 * 1.2020569031595942).epsilon(1e-10));
  CHECK_THROWS_AS(width_moment(1, 4), DomainError);
  CHECK(mean_width_asymptotic(1e4) == doctest::Approx(87.87).epsilon(1e-4));
  CHECK(mean_width_asymptotic(100) == doctest::Approx(8.11).epsilon(1e-3));
  double prev = mean_width_asymptotic(1);
  for (double n = 2; n < 1e6; n *= 1.5) {
    CHECK(mean_width_asymptotic(n) > prev);
    prev = mean_width_asymptotic(n);
  }
}

TEST_CASE("double exponential approximation") {
  CHECK(largest_block_cdf_approx(1024, 10) == doctest::Approx(std::exp(-0.5)).epsilon(1e-12));
  CHECK(largest_block_cdf_approx(1024, 20) == doctest::Approx(std::exp(-std::ldexp(1.0, -11))).epsilon(1e-12));
  CHECK(largest_block_cdf_approx(1536, 10) == doctest::Approx(std::exp(-1.5 / 2)).epsilon(1e-12));
  for (long n : {2L, 100L, 1000L, 1L << 20}) {
    double prev = 0;
    for (int k = 1; k < 60; ++k) {
      const double v = largest_block_cdf_approx(n, k);
      CHECK(v >= prev);
      prev = v;
    }
  }
  for (int n : {256, 1024}) {
    const double bound = 10 * std::log(n) * std::log(n) / n;
    const int center = static_cast<int>(std::log2(n));
    for (int k = center - 3; k <= center + 3; ++k) {
      const double exact = largest_block_cdf_exact(n, k).get_d();
      CHECK(std::abs(exact - largest_block_cdf_approx(n, k)) < bound);
    }
  }
}

TEST_CASE("characteristic system for the truncated equation") {
  for (int k = 1; k <= 64; ++k) {
    const auto r = solve_characteristic_maxblock(k);
    CHECK(r.residual_equation < 1e-13);
    CHECK(r.residual_derivative < 1e-13);
    CHECK(r.z0 > 0);
    CHECK(r.z0 < 1);
    CHECK(r.y0 > 0);
    // k = 1, 2 have a double root at y0 = 1, resolved only to about 1e-17.
    CHECK(r.y0 <= 1 + HighPrecision(1e-12));
    if (k >= 3) {
      CHECK(r.y0 < 1);
      CHECK(r.gamma > 0);
    }
  }
  CHECK(static_cast<double>(solve_characteristic_maxblock(2).z0) == doctest::Approx(1.0 / 3));
  CHECK_THROWS_AS(solve_characteristic_maxblock(0), DomainError);
  const auto r = solve_characteristic_maxblock(30);
  const HighPrecision two_k = pow(HighPrecision(2), 30);
  const HighPrecision dy = r.y0 - HighPrecision(0.5);
  const HighPrecision dz = r.z0 - HighPrecision(0.25);
  const double y_ratio = static_cast<double>(dy / (HighPrecision(31) / (two_k * 8)));
  const double z_ratio = static_cast<double>(dz / (HighPrecision(0.25) / (two_k * 2)));
  CHECK(std::abs(y_ratio - 1) < 0.01);
  CHECK(std::abs(z_ratio - 1) < 0.01);
  CHECK(static_cast<double>(r.gamma) == doctest::Approx(0.5).epsilon(1e-3));
}

TEST_CASE("singularity movement") {
  for (int l = 1; l <= 4; ++l) {
    CHECK(rho_of_q(l, 1.0) == 0.25);
    CHECK(block_rho_of_q(l, 1.0) == 0.25);
    CHECK(rho_of_q(l, 1.05) < 0.25);
    CHECK(rho_of_q(l, 0.95) > 0.25);
    const auto d = movement_derivatives(l, MarkerForm::Plus);
    CHECK(std::abs(d.first - (-3.0 / std::pow(2.0, 3 + l))) < 1e-6);
  }
  CHECK_THROWS(rho_of_q(1, 1.5));
  CHECK_THROWS(rho_of_q(0, 1.01));
  for (int l = 1; l <= 3; ++l) {
    const auto d = movement_derivatives(l, MarkerForm::Minus);
    const double v = (d.first / d.rho) * (d.first / d.rho) - d.second / d.rho - d.first / d.rho;
    CHECK(d.variability == doctest::Approx(v));
    CHECK(d.variability > 0);
    CHECK(block_rho_of_q(l, 1.05) < 0.25);
  }
}

TEST_CASE("coefficient growth for bounded block sizes") {
  const auto r = asymptotic_count_check(5, 2000);
  CHECK(r.rate_relative_error < 1e-3);
  CHECK(std::abs(r.fitted_exponent + 1.5) < 0.05);
  CHECK(r.expected_rate == doctest::Approx(1.0 / static_cast<double>(solve_characteristic_maxblock(5).z0)));
  const auto cat = asymptotic_count_check(200, 150);
  CHECK(cat.expected_rate == 4);
  CHECK(std::abs(cat.fitted_rate - 4) / 4 < 0.02);
  CHECK(std::abs(cat.fitted_exponent + 1.5) < 0.05);
}

}
