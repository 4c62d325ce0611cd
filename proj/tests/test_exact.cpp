#include "doctest.h"
#include "oracles.hpp"

#include <cmath>
#include <map>

#include "ncpart/error.hpp"
#include "ncpart/exact.hpp"
#include "ncpart/statistics.hpp"

using namespace ncpart;

namespace {

Rational q(long a, long b) { return fraction(a, b); }

// Per n: for each partition, the histogram of block sizes.
std::vector<std::vector<int>> histograms(int n) {
  std::vector<std::vector<int>> out;
  for_each_nc_partition(n, [&](const NCPartition& p) { out.push_back(block_size_histogram(p)); });
  return out;
}

}  // namespace

TEST_SUITE("exact") {

TEST_CASE("catalan and binomials") {
  CHECK(catalan(0) == 1);
  CHECK(catalan(1) == 1);
  CHECK(catalan(3) == 5);
  CHECK(catalan(4) == 14);
  const auto table = oracle::catalan_table(60);
  for (int n = 0; n <= 60; ++n) CHECK(catalan(n) == table[static_cast<std::size_t>(n)]);
  CHECK(binomial(5, 3) == 10);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(5, -1) == 0);
  CHECK(binomial(-3, 1) == 0);
  CHECK(negative_binomial_coefficient(0, 0) == 1);
  CHECK(negative_binomial_coefficient(3, 2) == 4);
}

TEST_CASE("block count moments") {
  CHECK(mean_blocks(1) == 1);
  CHECK(var_blocks_total(1) == 0);
  CHECK(mean_blocks(3) == 2);
  CHECK(var_blocks_total(3) == q(2, 5));
  CHECK(mean_blocks(4) == q(5, 2));
  CHECK(var_blocks_total(4) == q(15, 28));
}

TEST_CASE("size-l moments from the examples") {
  CHECK(mean_blocks_of_size(3, 1) == q(6, 5));
  CHECK(mean_blocks_of_size(4, 2) == q(5, 7));
  CHECK(mean_blocks_of_size(2, 2) == q(1, 2));
  CHECK(second_factorial_moment(3, 1) == q(6, 5));
  CHECK(second_factorial_moment(3, 2) == 0);
  CHECK(second_factorial_moment(4, 1) == q(12, 7));
  CHECK(cross_moment(3, 1, 2) == q(3, 5));
  CHECK(covariance(3, 1, 2) == q(-3, 25));
  CHECK(cross_moment(4, 1, 3) == q(2, 7));
  CHECK(cross_moment(4, 2, 3) == 0);
  CHECK_THROWS_AS(cross_moment(4, 2, 2), DomainError);
}

TEST_CASE("moments agree with enumeration for n <= 10") {
  for (int n = 1; n <= 10; ++n) {
    const auto hs = histograms(n);
    const Rational count(static_cast<long>(hs.size()));
    Rational s1 = 0;
    Rational s2 = 0;
    for (const auto& h : hs) {
      long b = 0;
      for (int v : h) b += v;
      s1 += b;
      s2 += b * b;
    }
    CHECK(mean_blocks(n) == s1 / count);
    CHECK(var_blocks_total(n) == s2 / count - (s1 / count) * (s1 / count));
    for (int l = 1; l <= n; ++l) {
      Rational m = 0;
      Rational f = 0;
      std::map<int, long> dist;
      for (const auto& h : hs) {
        const long x = h[static_cast<std::size_t>(l - 1)];
        m += x;
        f += x * (x - 1);
        ++dist[static_cast<int>(x)];
      }
      m /= count;
      f /= count;
      CHECK(mean_blocks_of_size(n, l) == m);
      CHECK(second_factorial_moment(n, l) == f);
      CHECK(variance_blocks_of_size(n, l) == f + m - m * m);
      const auto poly = blocks_polynomial(n, l);
      for (const auto& [j, c] : dist) CHECK(poly[static_cast<std::size_t>(j)] == c);
      CHECK(poly.coefficient_sum() == catalan(n));
      CHECK(poly.derivative().evaluate(1) / catalan(n) == m);
      for (int k = 1; k <= n; ++k) {
        if (k == l) continue;
        Rational cross = 0;
        std::map<std::pair<int, int>, long> joint;
        for (const auto& h : hs) {
          const long a = h[static_cast<std::size_t>(k - 1)];
          const long b = h[static_cast<std::size_t>(l - 1)];
          cross += a * b;
          ++joint[{static_cast<int>(a), static_cast<int>(b)}];
        }
        cross /= count;
        CHECK(cross_moment(n, k, l) == cross);
        CHECK(covariance(n, k, l) == cross - mean_blocks_of_size(n, k) * m);
        if (n <= 7) {
          const auto jp = joint_polynomial(n, k, l);
          Rational total = 0;
          for (const auto& [ab, c] : joint) {
            CHECK(jp.coefficient(static_cast<std::size_t>(ab.first), static_cast<std::size_t>(ab.second)) == c);
            total += c;
          }
          CHECK(jp.coefficient_sum() == total);
          CHECK(jp.mixed_derivative_at_one() / catalan(n) == cross);
          CHECK(jp.at_q(1) == blocks_polynomial(n, k));
        }
      }
    }
  }
}

TEST_CASE("polynomial examples and guard") {
  CHECK(blocks_polynomial(3, 1).to_string() == "1 + 3q + q^3");
  CHECK(blocks_polynomial(3, 3) == ExactPolynomial(std::vector<Rational>{4, 1}));
  CHECK_THROWS_AS(blocks_polynomial(kPolynomialGuard + 1, 1), GuardError);
  CHECK_NOTHROW(blocks_polynomial(kPolynomialGuard + 1, 1, kPolynomialGuard + 1));
}

TEST_CASE("negative correlation for k < l, k + l <= n <= 64") {
  for (int n = 2; n <= 64; ++n)
    for (int k = 1; k < n; ++k)
      for (int l = k + 1; k + l <= n; ++l) CHECK(sgn(covariance(n, k, l)) < 0);
}

TEST_CASE("asymptotic leading terms") {
  CHECK(asymptotic_var(1, 16.0) == doctest::Approx(3.0));
  for (int l = 1; l <= 6; ++l) CHECK(asymptotic_cov(1, l, 100.0) == doctest::Approx(-200.0 / std::pow(2.0, l + 4)));
  for (auto [k, l] : {std::pair{1, 2}, std::pair{2, 3}, std::pair{1, 3}}) {
    std::vector<double> remainder;
    for (int n = 256; n <= 2048; n *= 2) {
      const Rational c = covariance(n, k, l);
      remainder.push_back(std::abs(c.get_d() - asymptotic_cov(k, l, n)));
    }
    for (double r : remainder) CHECK(r < 1.0);
    CHECK(remainder.back() <= remainder.front() + 0.05);
  }
  for (int l = 1; l <= 3; ++l) {
    const double v = variance_blocks_of_size(2048, l).get_d();
    CHECK(std::abs(v - asymptotic_var(l, 2048)) < 1.0);
  }
}

TEST_CASE("singleton generating function") {
  const auto s = singleton_gf_series(40);
  CHECK(s[0] == ExactPolynomial(1));
  CHECK(s[3].to_string() == "1 + 3q + q^3");
  for (int n = 1; n < 40; ++n) {
    CHECK(s[static_cast<std::size_t>(n)] == blocks_polynomial(n, 1));
    CHECK(s[static_cast<std::size_t>(n)].evaluate(1) == catalan(n));
  }
  CHECK_THROWS_AS(singleton_gf_series(kPolynomialGuard + 2), GuardError);
}

TEST_CASE("max block series") {
  const auto y = max_block_series(2, 10);
  CHECK(y[4] == 4);
  CHECK(y[5] == 9);
  for (int n = 1; n <= 10; ++n) {
    std::vector<long> at_most(static_cast<std::size_t>(n) + 1, 0);
    for_each_nc_partition(n, [&](const NCPartition& p) {
      for (int k = largest_block(p); k <= n; ++k) ++at_most[static_cast<std::size_t>(k)];
    });
    for (int k = 1; k <= n; ++k) {
      const auto series = max_block_series(k, n + 1);
      CHECK(series[static_cast<std::size_t>(n) + 1] == at_most[static_cast<std::size_t>(k)]);
      CHECK(count_max_block_at_most(n, k) == at_most[static_cast<std::size_t>(k)]);
      CHECK(largest_block_cdf_exact(n, k) == fraction(at_most[static_cast<std::size_t>(k)], catalan(n)));
    }
  }
  const auto big = max_block_series(40, 31);
  for (int n = 1; n <= 30; ++n) CHECK(big[static_cast<std::size_t>(n) + 1] == catalan(n));
  CHECK_THROWS_AS(max_block_series(2, kMaxBlockSeriesGuard + 1), GuardError);
}

TEST_CASE("largest block CDF examples and shape") {
  CHECK(largest_block_cdf_exact(3, 1) == q(1, 5));
  CHECK(largest_block_cdf_exact(4, 2) == q(9, 14));
  CHECK(largest_block_cdf_exact(3, 3) == 1);
  for (int n : {50, 300}) {
    Rational prev = 0;
    for (int k = 1; k <= n; ++k) {
      const Rational c = largest_block_cdf_exact(n, k);
      CHECK(c >= prev);
      CHECK(c <= 1);
      if (n == 300 || k % 7 == 0) CHECK(c * catalan(n) == max_block_series(k, n + 1)[static_cast<std::size_t>(n) + 1]);
      prev = c;
    }
    CHECK(prev == 1);
  }
}

TEST_CASE("lagrange coefficients") {
  const RationalSeries geometric(std::vector<Rational>(30, Rational(1)), 30);
  for (int n = 1; n <= 25; ++n) CHECK(lagrange_coefficient(geometric, n) == catalan(n - 1));
  const RationalSeries linear(std::vector<Rational>{1, 1}, 30);
  for (int n = 1; n <= 25; ++n) CHECK(lagrange_coefficient(linear, n) == 1);
  const RationalSeries scaled(std::vector<Rational>{3, 5}, 10);
  CHECK(lagrange_coefficient(scaled, 1) == 3);
  const RationalSeries bad(std::vector<Rational>{0, 1}, 10);
  CHECK_THROWS(lagrange_coefficient(bad, 3));
}

TEST_CASE("series arithmetic") {
  const RationalSeries one_minus(std::vector<Rational>{1, -1}, 12);
  const auto inv = one_minus.inverse();
  for (std::size_t i = 0; i < 12; ++i) CHECK(inv[i] == 1);
  const RationalSeries f(std::vector<Rational>{1, 2, q(1, 3), -4, 7}, 15);
  const auto root = f.sqrt();
  CHECK(root * root == f);
  CHECK(f.pow(q(1, 2)) == root);
  CHECK(f.pow(3) == f * f * f);
  CHECK(f.pow(-1) == f.inverse());
  CHECK(f * f.inverse() == RationalSeries(std::vector<Rational>{1}, 15));
  const RationalSeries shifted(std::vector<Rational>{0, 0, 5, 6}, 8);
  CHECK(shifted.divide_by_z(2) == RationalSeries(std::vector<Rational>{5, 6}, 6));
  CHECK_THROWS_AS(shifted.divide_by_z(3), DomainError);
  CHECK_THROWS_AS(RationalSeries(std::vector<Rational>{2, 1}, 5).sqrt(), DomainError);
  CHECK_THROWS_AS(RationalSeries(std::vector<Rational>{0, 1}, 5).inverse(), DomainError);
  CHECK((f + one_minus).order() == 12);
}

TEST_CASE("polynomial arithmetic") {
  const ExactPolynomial a(std::vector<Rational>{1, 2, 0, 0});
  CHECK(a.degree() == 1);
  const ExactPolynomial b(std::vector<Rational>{-1, 0, 3});
  CHECK((a * b).to_string() == "-1 - 2q + 3q^2 + 6q^3");
  CHECK((a - a).is_zero());
  CHECK((a - a).degree() == -1);
  CHECK(b.evaluate(2) == 11);
  CHECK(b.derivative() == ExactPolynomial(std::vector<Rational>{0, 6}));
  CHECK(ExactPolynomial::monomial(q(1, 2), 3).to_string('x') == "(1/2)x^3");
  const std::vector<Rational> around_one{0, 0, 1};
  CHECK(shift_from_minus_one(around_one) == std::vector<Rational>{1, -2, 1});
  CHECK(fraction(6, 4) == q(3, 2));
  CHECK(fraction(6, 4).get_den() == 2);
}

}
