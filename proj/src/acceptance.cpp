#include "ncpart/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <sstream>

#include "ncpart/bijections.hpp"
#include "ncpart/exact.hpp"
#include "ncpart/harness.hpp"
#include "ncpart/limitlaws.hpp"
#include "ncpart/statistics.hpp"
#include "ncpart/structures.hpp"

namespace ncpart {

namespace {

constexpr std::uint64_t kSeed = 20240611;
constexpr long kSamples = 100000;

// Criterion 3 and 4.
constexpr int kCltN = 2000;
constexpr double kKsBlocks = 0.02;
constexpr double kKsSizes = 0.03;
constexpr double kProfileRel = 0.05;
// Criterion 5.
constexpr int kCovarianceMaxN = 64;
constexpr int kCovarianceN = 1000;
constexpr double kCovarianceSe = 3.0;
// Criterion 6.
constexpr double kApproxFactor = 10.0;
constexpr int kApproxWindow = 5;
constexpr int kConcentrationN = 1 << 14;
constexpr double kConcentrationEps = 0.25;
constexpr double kConcentrationFraction = 0.95;
// Criterion 7.
constexpr int kWidthN = 10000;
constexpr double kWidthMeanRel = 0.02;
constexpr double kWidthTailAbs = 0.01;
constexpr double kWidthSecondRel = 0.05;
// Criterion 8.
constexpr int kSingularityMaxK = 64;
constexpr double kResidualMax = 1e-13;
constexpr int kExpansionK = 30;
constexpr double kExpansionFactor = 1.01;
constexpr double kSlopeAbs = 1e-6;
constexpr int kRateN = 2000;
constexpr int kRateK = 5;
constexpr double kRateRel = 1e-3;
// Criterion 9.
constexpr int kSingletonMaxN = 200;

/// Collects the first few mismatches of an exhaustive check.
class Tally {
 public:
  void expect(bool ok, const std::function<std::string()>& what) {
    ++checks_;
    if (ok) return;
    ++failures_;
    if (failures_ <= 3) notes_ << (failures_ > 1 ? "; " : "") << what();
  }
  bool ok() const { return failures_ == 0; }
  std::string summary() const {
    std::ostringstream s;
    s << checks_ << " checks";
    if (failures_) s << ", " << failures_ << " failed: " << notes_.str();
    return s.str();
  }

 private:
  long checks_ = 0;
  long failures_ = 0;
  std::ostringstream notes_;
};

std::string fmt(double v) {
  std::ostringstream s;
  s.precision(6);
  s << v;
  return s.str();
}

bool within_factor(double value, double reference, double factor) {
  const double ratio = value / reference;
  return ratio <= factor && ratio >= 1 / factor;
}

CriterionResult criterion_enumeration() {
  Tally t;
  for (int n = 1; n <= 10; ++n) {
    const std::string at = "n=" + std::to_string(n);
    BigInt count = 0;
    BigInt sum_blocks = 0;
    BigInt sum_blocks_sq = 0;
    // by_size[l][j]: partitions with j blocks of size l
    std::vector<std::vector<long>> by_size(static_cast<std::size_t>(n) + 1, std::vector<long>(n + 1, 0));
    std::vector<long> largest(static_cast<std::size_t>(n) + 1, 0);
    std::map<std::array<int, 4>, long> joint;  // (k, l, a, b)
    std::vector<BigInt> factorial2(static_cast<std::size_t>(n) + 1, 0);
    std::vector<std::vector<BigInt>> cross(static_cast<std::size_t>(n) + 1, std::vector<BigInt>(n + 1, 0));
    for_each_nc_partition(n, [&](const NCPartition& p) {
      ++count;
      const long x = static_cast<long>(p.num_blocks());
      sum_blocks += x;
      sum_blocks_sq += x * x;
      const auto h = block_size_histogram(p);
      for (int l = 1; l <= n; ++l) {
        const int c = h[static_cast<std::size_t>(l - 1)];
        ++by_size[static_cast<std::size_t>(l)][static_cast<std::size_t>(c)];
        factorial2[static_cast<std::size_t>(l)] += long(c) * (c - 1);
        for (int k = 1; k < l; ++k) {
          const int ck = h[static_cast<std::size_t>(k - 1)];
          ++joint[{k, l, ck, c}];
          cross[static_cast<std::size_t>(k)][static_cast<std::size_t>(l)] += long(ck) * c;
        }
      }
      ++largest[static_cast<std::size_t>(largest_block(p))];
    });
    const BigInt cat = catalan(n);
    t.expect(count == cat, [&] { return at + " count"; });
    const Rational mean = fraction(sum_blocks, cat);
    const Rational second = fraction(sum_blocks_sq, cat);
    t.expect(mean == mean_blocks(n), [&] { return at + " mean"; });
    t.expect(second - mean * mean == var_blocks_total(n), [&] { return at + " variance"; });
    for (int l = 1; l <= n; ++l) {
      const auto poly = blocks_polynomial(n, l);
      for (int j = 0; j <= n; ++j)
        t.expect(poly[static_cast<std::size_t>(j)] == by_size[static_cast<std::size_t>(l)][static_cast<std::size_t>(j)],
                 [&] { return at + " blocks_polynomial l=" + std::to_string(l); });
      t.expect(poly.degree() <= n, [&] { return at + " blocks_polynomial degree"; });
      Rational mean_l = 0;
      for (int j = 0; j <= n; ++j) mean_l += Rational(j * by_size[static_cast<std::size_t>(l)][static_cast<std::size_t>(j)]);
      mean_l /= cat;
      const Rational fact2 = fraction(factorial2[static_cast<std::size_t>(l)], cat);
      t.expect(mean_blocks_of_size(n, l) == mean_l, [&] { return at + " mean_blocks_of_size"; });
      t.expect(second_factorial_moment(n, l) == fact2, [&] { return at + " second_factorial_moment"; });
      t.expect(variance_blocks_of_size(n, l) == fact2 + mean_l - mean_l * mean_l,
               [&] { return at + " variance_blocks_of_size"; });
      for (int k = 1; k < l; ++k) {
        const auto jp = joint_polynomial(n, k, l);
        for (int a = 0; a <= n; ++a)
          for (int b = 0; b <= n; ++b) {
            const auto it = joint.find({k, l, a, b});
            const long expected = it == joint.end() ? 0 : it->second;
            t.expect(jp.coefficient(static_cast<std::size_t>(a), static_cast<std::size_t>(b)) == expected,
                     [&] { return at + " joint_polynomial k=" + std::to_string(k) + " l=" + std::to_string(l); });
          }
        const Rational cm = fraction(cross[static_cast<std::size_t>(k)][static_cast<std::size_t>(l)], cat);
        Rational mean_k = mean_blocks_of_size(n, k);
        t.expect(cross_moment(n, k, l) == cm && cross_moment(n, l, k) == cm, [&] { return at + " cross_moment"; });
        t.expect(covariance(n, k, l) == cm - mean_k * mean_l, [&] { return at + " covariance"; });
      }
    }
    long cumulative = 0;
    for (int k = 1; k <= n; ++k) {
      cumulative += largest[static_cast<std::size_t>(k)];
      t.expect(largest_block_cdf_exact(n, k) == fraction(cumulative, cat),
               [&] { return at + " largest_block_cdf_exact k=" + std::to_string(k); });
      const auto series = max_block_series(k, n + 1);
      t.expect(series[static_cast<std::size_t>(n) + 1] == cumulative,
               [&] { return at + " max_block_series k=" + std::to_string(k); });
    }
  }
  return {1, "exact enumeration reconciliation (n <= 10)", t.ok(), t.summary()};
}

std::vector<int> down_runs(std::span<const Step> steps) {
  std::vector<int> runs;
  int run = 0;
  for (Step s : steps) {
    if (s == Step::Down) {
      ++run;
    } else if (run > 0) {
      runs.push_back(run);
      run = 0;
    }
  }
  if (run > 0) runs.push_back(run);
  std::sort(runs.begin(), runs.end());
  return runs;
}

CriterionResult criterion_bijections() {
  Tally t;
  for (int n = 1; n <= 10; ++n) {
    const std::string at = "n=" + std::to_string(n);
    for_each_dyck_path(n, [&](const DyckPath& path) {
      const NCPartition pi = dyck_to_partition(path);
      t.expect(partition_to_dyck(pi) == path, [&] { return at + " partition round trip " + path.to_string(); });
      const PlanarTree tree = dyck_to_planar_tree(path);
      t.expect(planar_tree_to_dyck(tree) == path, [&] { return at + " planar tree round trip " + path.to_string(); });
      t.expect(planar_tree_blocks(tree) == pi, [&] { return at + " planar tree blocks " + path.to_string(); });
      const BinaryTree binary = dyck_to_binary_tree(path);
      t.expect(binary_tree_to_dyck(binary) == path, [&] { return at + " binary tree round trip " + path.to_string(); });
      t.expect(binary_tree_blocks(binary) == pi, [&] { return at + " binary tree blocks " + path.to_string(); });
      const NCPairing matched = dyck_to_pairing(path);
      t.expect(pairing_to_dyck(matched) == path, [&] { return at + " pairing round trip " + path.to_string(); });

      const auto blocks = static_cast<long>(pi.num_blocks());
      t.expect(dyck_peaks(path) == blocks && static_cast<long>(tree.leaf_count()) == blocks,
               [&] { return at + " peaks/leaves/blocks " + path.to_string(); });
      std::vector<int> sizes;
      for (const auto& b : pi.blocks()) sizes.push_back(static_cast<int>(b.size()));
      std::sort(sizes.begin(), sizes.end());
      t.expect(sizes == down_runs(path.steps()), [&] { return at + " block sizes vs down runs " + path.to_string(); });

      const NCPairing doubled = double_partition(pi);
      t.expect(undouble(doubled) == pi, [&] { return at + " undouble " + pi.to_string(); });
      const int pw = pairing_width(doubled);
      t.expect(width(pi) == pw / 2, [&] { return at + " width doubling " + pi.to_string(); });
      t.expect(dyck_height(pairing_to_dyck(doubled)) == pw, [&] { return at + " pairing height " + pi.to_string(); });
    });
    for_each_nc_partition(n, [&](const NCPartition& pi) {
      t.expect(dyck_to_partition(partition_to_dyck(pi)) == pi, [&] { return at + " partition side " + pi.to_string(); });
    });
  }
  return {2, "bijection round trips and statistic transport (n <= 10)", t.ok(), t.summary()};
}

CriterionResult criterion_clt(const std::vector<SampleRecord>& records) {
  Thresholds th;
  th.clt_ks_max = kKsBlocks;
  th.size_ks_max.clear();
  th.size_ks_default = kKsSizes;
  std::ostringstream detail;
  bool pass = true;
  const auto blocks = analyze_clt_blocks(kCltN, kSeed, records, th);
  const double ks = blocks.observed.at("ks");
  pass &= ks < kKsBlocks;
  detail << "KS(X_n) = " << fmt(ks) << " (< " << kKsBlocks << ")";
  for (int l = 1; l <= 3; ++l) {
    const auto sized = analyze_clt_blocks_of_size(kCltN, l, kSeed, records, th);
    const double ksl = sized.observed.at("ks");
    pass &= ksl < kKsSizes;
    detail << ", KS(l=" << l << ") = " << fmt(ksl) << " (< " << kKsSizes << ")";
  }
  return {3, "CLT for block counts at n = 2000", pass, detail.str()};
}

CriterionResult criterion_profile(const std::vector<SampleRecord>& records) {
  std::ostringstream detail;
  bool pass = true;
  for (int l = 1; l <= 4; ++l) {
    double sum = 0;
    for (const auto& r : records) sum += r.of_size[static_cast<std::size_t>(l - 1)];
    const double ratio = sum / static_cast<double>(records.size()) / kCltN;
    const double target = std::ldexp(1.0, -(l + 1));
    const double rel = std::abs(ratio / target - 1);
    pass &= rel <= kProfileRel;
    detail << (l > 1 ? ", " : "") << "l=" << l << ": " << fmt(ratio) << " vs " << target << " (rel " << fmt(rel) << ")";
  }
  return {4, "geometric block profile at n = 2000", pass, detail.str()};
}

CriterionResult criterion_covariance(int threads) {
  Tally t;
  for (int n = 3; n <= kCovarianceMaxN; ++n)
    for (int k = 1; k < n; ++k)
      for (int l = k + 1; k + l <= n; ++l)
        t.expect(sgn(covariance(n, k, l)) < 0, [&] {
          return "cov(" + std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(l) + ") >= 0";
        });
  const auto records = sample_statistics(kCovarianceN, kSamples, kSeed + 5, threads);
  Thresholds th;
  th.covariance_standard_errors = kCovarianceSe;
  std::ostringstream detail;
  bool pass = t.ok();
  detail << "exact signs: " << t.summary();
  for (auto [k, l] : {std::pair{1, 2}, std::pair{2, 3}}) {
    const auto r = analyze_negative_correlation(kCovarianceN, k, l, kSeed + 5, records, th);
    const double z = std::abs(r.observed.at("covariance") - r.references[0].value) / r.observed.at("standard_error");
    pass &= z <= kCovarianceSe && r.observed.at("covariance") < 0;
    detail << "; n=1000 (k,l)=(" << k << "," << l << "): empirical " << fmt(r.observed.at("covariance")) << " vs exact "
           << fmt(r.references[0].value) << " (" << fmt(z) << " SE)";
  }
  return {5, "negative correlation of block-size counts", pass, detail.str()};
}

CriterionResult criterion_largest(int threads) {
  std::ostringstream detail;
  bool pass = true;
  double previous = 2;
  for (int n : {256, 1024, 4096}) {
    const double gap = largest_block_approx_gap(n, kApproxWindow);
    const double ln = std::log(static_cast<double>(n));
    const double bound = kApproxFactor * ln * ln / n;
    pass &= gap < bound && gap < previous;
    previous = gap;
    detail << "n=" << n << ": gap " << fmt(gap) << " (bound " << fmt(bound) << "); ";
  }
  const auto records = sample_statistics(kConcentrationN, kSamples, kSeed + 6, threads);
  const double log2n = std::log2(static_cast<double>(kConcentrationN));
  const auto inside = std::count_if(records.begin(), records.end(),
                                    [&](const SampleRecord& r) { return std::abs(r.largest / log2n - 1) <= kConcentrationEps; });
  const double fraction = static_cast<double>(inside) / static_cast<double>(records.size());
  pass &= fraction >= kConcentrationFraction;
  // Exact probability of the same band, for comparison with the threshold.
  const int low = static_cast<int>(std::ceil((1 - kConcentrationEps) * log2n));
  const int high = static_cast<int>(std::floor((1 + kConcentrationEps) * log2n));
  const Rational band = largest_block_cdf_exact(kConcentrationN, high, kConcentrationN) -
                        largest_block_cdf_exact(kConcentrationN, low - 1, kConcentrationN);
  detail << "n=2^14 concentration " << fmt(fraction) << " (>= " << kConcentrationFraction << "; exact P[" << low
         << " <= L <= " << high << "] = " << fmt(band.get_d()) << ")";
  return {6, "largest block: double-exponential law and concentration", pass, detail.str()};
}

CriterionResult criterion_width(int threads) {
  const auto records = sample_statistics(kWidthN, kSamples, kSeed + 7, threads);
  double sum = 0;
  double sum_sq = 0;
  long tail = 0;
  const double threshold = std::ceil(std::sqrt(double(kWidthN)) / 2);
  for (const auto& r : records) {
    sum += r.width;
    sum_sq += double(r.width) * r.width;
    if (r.width >= threshold) ++tail;
  }
  const auto total = static_cast<double>(records.size());
  const double mean = sum / total;
  const double second = sum_sq / total;
  const double tail_fraction = tail / total;
  const double mean_ref = mean_width_asymptotic(kWidthN);
  const double theta = theta_tail(1.0);
  const double second_ref = width_moment(2, kWidthN);
  const double mean_rel = std::abs(mean / mean_ref - 1);
  const double tail_err = std::abs(tail_fraction - theta);
  const double second_rel = std::abs(second / second_ref - 1);
  const bool pass = mean_rel < kWidthMeanRel && tail_err < kWidthTailAbs && second_rel < kWidthSecondRel;
  std::ostringstream detail;
  detail << "mean " << fmt(mean) << " vs " << fmt(mean_ref) << " (rel " << fmt(mean_rel) << "), tail(1) "
         << fmt(tail_fraction) << " vs " << fmt(theta) << ", second moment " << fmt(second) << " vs " << fmt(second_ref)
         << " (rel " << fmt(second_rel) << ")";
  return {7, "width at n = 10^4", pass, detail.str()};
}

CriterionResult criterion_singularity() {
  std::ostringstream detail;
  bool pass = true;
  double worst = 0;
  for (int k = 1; k <= kSingularityMaxK; ++k) {
    const auto s = solve_characteristic_maxblock(k);
    worst = std::max({worst, static_cast<double>(s.residual_equation), static_cast<double>(s.residual_derivative)});
  }
  pass &= worst < kResidualMax;
  detail << "max residual k<=64: " << fmt(worst);

  const auto s = solve_characteristic_maxblock(kExpansionK);
  const HighPrecision scale = boost::multiprecision::ldexp(HighPrecision(1), -(kExpansionK + 3));
  const double y_ratio = static_cast<double>((s.y0 - HighPrecision("0.5")) / (scale * (kExpansionK + 1)));
  const double z_ratio = static_cast<double>((s.z0 - HighPrecision("0.25")) / scale);
  const double gamma = static_cast<double>(s.gamma);
  const bool expansions = within_factor(y_ratio, 1, kExpansionFactor) && within_factor(z_ratio, 1, kExpansionFactor) &&
                          within_factor(gamma, 0.5, kExpansionFactor);
  pass &= expansions;
  detail << "; k=30 ratios y " << fmt(y_ratio) << ", z " << fmt(z_ratio) << ", gamma " << fmt(gamma);

  for (int l = 1; l <= 3; ++l) {
    const auto d = movement_derivatives(l, MarkerForm::Plus);
    const double target = -3.0 * std::ldexp(1.0, -(3 + l));
    pass &= std::abs(d.first - target) < kSlopeAbs;
    detail << "; drho/dq(l=" << l << ") " << fmt(d.first) << " vs " << target;
  }
  const auto rate = asymptotic_count_check(kRateK, kRateN);
  pass &= rate.rate_relative_error < kRateRel;
  detail << "; rate " << fmt(rate.fitted_rate) << " vs 1/z0 " << fmt(rate.expected_rate) << " (rel "
         << fmt(rate.rate_relative_error) << ")";
  return {8, "singularity analysis", pass, detail.str()};
}

CriterionResult criterion_singleton() {
  Tally t;
  const auto series = singleton_gf_series(kSingletonMaxN + 1);
  t.expect(series[0] == ExactPolynomial(1), [] { return std::string("constant term"); });
  for (int n = 1; n <= kSingletonMaxN; ++n)
    t.expect(series[static_cast<std::size_t>(n)] == blocks_polynomial(n, 1),
             [&] { return "n=" + std::to_string(n); });
  return {9, "singleton generating function vs blocks_polynomial (n <= 200)", t.ok(), t.summary()};
}

}  // namespace

std::vector<CriterionResult> run_acceptance(std::ostream& out, int threads, const std::set<int>& only) {
  std::vector<CriterionResult> results;
  std::vector<SampleRecord> clt_records;
  auto wanted = [&](int id) { return only.empty() || only.count(id) > 0; };
  auto run = [&](int id, const std::function<CriterionResult()>& body) {
    if (!wanted(id)) return;
    const auto start = std::chrono::steady_clock::now();
    CriterionResult r;
    try {
      r = body();
    } catch (const std::exception& e) {
      r = {id, "criterion " + std::to_string(id), false, std::string("exception: ") + e.what()};
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out << "criterion " << r.id << ": " << (r.pass ? "PASS" : "FAIL") << "  " << r.title << "  [" << r.detail << "] ("
        << fmt(r.seconds) << " s)" << std::endl;
    results.push_back(r);
  };
  auto clt = [&]() -> const std::vector<SampleRecord>& {
    if (clt_records.empty()) clt_records = sample_statistics(kCltN, kSamples, kSeed + 3, threads);
    return clt_records;
  };
  run(1, criterion_enumeration);
  run(2, criterion_bijections);
  run(3, [&] { return criterion_clt(clt()); });
  run(4, [&] { return criterion_profile(clt()); });
  run(5, [&] { return criterion_covariance(threads); });
  run(6, [&] { return criterion_largest(threads); });
  run(7, [&] { return criterion_width(threads); });
  run(8, criterion_singularity);
  run(9, criterion_singleton);
  return results;
}

}  // namespace ncpart
