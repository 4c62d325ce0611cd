#include "doctest.h"

#include <boost/math/distributions/chi_squared.hpp>

#include <map>
#include <random>

#include "ncpart/error.hpp"
#include "ncpart/sampling.hpp"

using namespace ncpart;

namespace {

double chi_square_p_value(const std::map<std::string, long>& counts, std::size_t categories, long samples) {
  const double expected = static_cast<double>(samples) / static_cast<double>(categories);
  double stat = 0;
  for (const auto& [key, c] : counts) stat += (c - expected) * (c - expected) / expected;
  stat += static_cast<double>(categories - counts.size()) * expected;
  boost::math::chi_squared dist(static_cast<double>(categories - 1));
  return boost::math::cdf(boost::math::complement(dist, stat));
}

}  // namespace

TEST_SUITE("sampling") {

TEST_CASE("engine seeding follows the documented seed_seq layout") {
  const std::uint64_t seed = 0x0123456789abcdefULL;
  const std::uint64_t stream = 0xfedcba9876543210ULL;
  std::seed_seq seq{0x89abcdefu, 0x01234567u, 0x76543210u, 0xfedcba98u};
  std::mt19937_64 reference(seq);
  RngState rng(seed, stream);
  for (int i = 0; i < 100; ++i) CHECK(rng.next_u64() == reference());
}

TEST_CASE("standard engine reference value") {
  // The C++ standard fixes the 10000th output of a default-constructed mt19937_64.
  std::mt19937_64 e;
  e.discard(9999);
  CHECK(e() == 9981545732273789042ULL);
}

TEST_CASE("below is in range and roughly uniform") {
  RngState rng(1, 2);
  std::vector<long> hist(7, 0);
  for (int i = 0; i < 70000; ++i) {
    const auto v = rng.below(7);
    REQUIRE(v < 7);
    ++hist[v];
  }
  for (long h : hist) CHECK(std::abs(h - 10000) < 500);
  for (int i = 0; i < 1000; ++i) CHECK(rng.below(1) == 0);
  for (int i = 0; i < 1000; ++i) {
    const double u = rng.uniform01();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
  }
}

TEST_CASE("trivial sizes") {
  RngState rng(0, 0);
  for (int i = 0; i < 10; ++i) CHECK(sample_dyck(1, rng).to_string() == "UD");
  for (int i = 0; i < 10; ++i) CHECK(sample_nc_partition(1, rng).to_string() == "{1}");
  CHECK_THROWS_AS(sample_dyck(0, rng), DomainError);
}

TEST_CASE("UDUD frequency at n = 2") {
  RngState rng(11, 0);
  long hits = 0;
  const long samples = 100000;
  for (long i = 0; i < samples; ++i) hits += sample_dyck(2, rng).to_string() == "UDUD";
  const double f = static_cast<double>(hits) / samples;
  CHECK(f >= 0.494);
  CHECK(f <= 0.506);
}

TEST_CASE("chi-square uniformity for n = 2..6") {
  for (int n = 2; n <= 6; ++n) {
    RngState rng(100 + static_cast<std::uint64_t>(n), 0);
    std::map<std::string, long> counts;
    const long samples = 100000;
    for (long i = 0; i < samples; ++i) ++counts[sample_dyck(n, rng).to_string()];
    const auto all = enumerate_dyck(n);
    for (const auto& [key, c] : counts) CHECK_NOTHROW(DyckPath::parse(key));
    CHECK(counts.size() == all.size());
    const double p = chi_square_p_value(counts, all.size(), samples);
    INFO("n = " << n << " p = " << p);
    CHECK(p > 1e-3);
  }
}

TEST_CASE("partition frequencies at n = 3 and no crossing at n = 4") {
  RngState rng(5, 0);
  std::map<std::string, long> counts;
  for (int i = 0; i < 100000; ++i) ++counts[sample_nc_partition(3, rng).to_string()];
  CHECK(counts.size() == 5);
  for (const auto& [key, c] : counts) CHECK(std::abs(c / 1e5 - 0.2) <= 0.005);
  for (int i = 0; i < 100000; ++i) CHECK(sample_nc_partition(4, rng).to_string() != "{1,3}|{2,4}");
}

TEST_CASE("samples are valid paths at large n") {
  RngState rng(9, 3);
  for (int n : {10, 100, 1000, 5000}) {
    const auto p = sample_dyck(n, rng);
    CHECK(p.semilength() == n);
    CHECK_NOTHROW(DyckPath::parse(p.to_string()));
  }
}

TEST_CASE("determinism per seed and stream") {
  RngState a(42, 7);
  RngState b(42, 7);
  RngState c(42, 8);
  bool any_differs = false;
  for (int i = 0; i < 20; ++i) {
    const auto pa = sample_dyck(50, a).to_string();
    CHECK(pa == sample_dyck(50, b).to_string());
    any_differs |= pa != sample_dyck(50, c).to_string();
  }
  CHECK(any_differs);
  std::vector<Step> steps;
  std::vector<Step> scratch;
  RngState d(42, 7);
  RngState e(42, 7);
  sample_dyck_steps(50, d, steps, scratch);
  CHECK(make_dyck_path_unchecked(steps) == sample_dyck(50, e));
}

}
