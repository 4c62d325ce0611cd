#include "ncpart/harness.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <fstream>
#include <sstream>
#include <thread>

#include "ncpart/error.hpp"
#include "ncpart/exact.hpp"
#include "ncpart/limitlaws.hpp"
#include "ncpart/sampling.hpp"
#include "ncpart/statistics.hpp"

namespace ncpart {

namespace {

struct Moments {
  double mean = 0;
  double variance = 0;  // unbiased
};

Moments moments(std::span<const double> v) {
  Moments m;
  if (v.empty()) return m;
  for (double x : v) m.mean += x;
  m.mean /= static_cast<double>(v.size());
  for (double x : v) m.variance += (x - m.mean) * (x - m.mean);
  if (v.size() > 1) m.variance /= static_cast<double>(v.size() - 1);
  return m;
}

Reference exact_reference(const std::string& name, const Rational& value) {
  return {name, value.get_d(), "exact", value.get_str()};
}

Reference asymptotic_reference(const std::string& name, double value) {
  return {name, value, "asymptotic", ""};
}

ExperimentReport make_report(const std::string& id, int n, long samples, std::uint64_t seed) {
  ExperimentReport r;
  r.experiment_id = id;
  r.parameters["n"] = n;
  r.parameters["samples"] = samples;
  r.parameters["seed"] = static_cast<long long>(seed);
  return r;
}

void check_tracked(int l) {
  if (l < 1 || l > kTrackedSizes)
    throw DomainError("block size must be between 1 and " + std::to_string(kTrackedSizes));
}

double normalized_ks(std::vector<double> values, double mean, double variance) {
  const double sd = std::sqrt(variance);
  for (double& v : values) v = (v - mean) / sd;
  std::sort(values.begin(), values.end());
  return ks_distance(values, std_normal_cdf);
}

int floor_log2(int n) { return std::bit_width(static_cast<unsigned>(n)) - 1; }

}  // namespace

std::vector<SampleRecord> sample_statistics(int n, long samples, std::uint64_t seed, int threads) {
  if (n < 1) throw DomainError("sampling needs n >= 1");
  if (samples < 0) throw DomainError("samples must be nonnegative");
  std::vector<SampleRecord> out(static_cast<std::size_t>(samples));
  const long chunks = (samples + kChunkSize - 1) / kChunkSize;
  if (threads <= 0) threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  threads = static_cast<int>(std::min<long>(threads, std::max(1L, chunks)));
  std::atomic<long> next{0};
  auto worker = [&] {
    std::vector<Step> steps;
    std::vector<Step> scratch;
    DyckPartitionStats stats;
    for (long c = next++; c < chunks; c = next++) {
      RngState rng(seed, static_cast<std::uint64_t>(c));
      const long end = std::min(samples, (c + 1) * kChunkSize);
      for (long i = c * kChunkSize; i < end; ++i) {
        sample_dyck_steps(n, rng, steps, scratch);
        stats.compute(steps);
        auto& rec = out[static_cast<std::size_t>(i)];
        rec.blocks = stats.num_blocks();
        rec.largest = stats.largest_block();
        rec.width = stats.width();
        for (int l = 1; l <= kTrackedSizes; ++l) rec.of_size[static_cast<std::size_t>(l - 1)] = stats.blocks_of_size(l);
      }
    }
  };
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  return out;
}

double ks_distance(std::span<const double> samples, const std::function<double(double)>& cdf) {
  if (samples.empty()) throw DomainError("ks_distance needs at least one sample");
  const auto total = static_cast<double>(samples.size());
  double d = 0;
  std::size_t i = 0;
  while (i < samples.size()) {
    std::size_t j = i;
    while (j < samples.size() && samples[j] == samples[i]) ++j;
    const double f = cdf(samples[i]);
    d = std::max({d, std::abs(static_cast<double>(j) / total - f), std::abs(static_cast<double>(i) / total - f)});
    i = j;
  }
  return d;
}

double Thresholds::size_ks_for(int l) const {
  const auto it = size_ks_max.find(l);
  return it == size_ks_max.end() ? size_ks_default : it->second;
}

nlohmann::json Thresholds::to_json() const {
  nlohmann::json by_l = nlohmann::json::object();
  for (const auto& [l, v] : size_ks_max) by_l[std::to_string(l)] = v;
  return {{"schema", 1},
          {"clt_blocks", {{"ks_max", clt_ks_max}, {"mean_sigmas", clt_mean_sigmas}, {"variance_rel", clt_variance_rel}}},
          {"clt_size", {{"ks_max", by_l}, {"ks_default", size_ks_default}, {"mean_rel", size_mean_rel}}},
          {"covariance", {{"standard_errors", covariance_standard_errors}}},
          {"largest_block",
           {{"epsilon", largest_epsilon},
            {"max_violation", largest_max_violation},
            {"tv_max", largest_tv_max},
            {"approx_factor", largest_approx_factor},
            {"window", largest_window}}},
          {"width",
           {{"mean_rel", width_mean_rel},
            {"tail_abs", width_tail_abs},
            {"second_moment_rel", width_second_moment_rel},
            {"grid", width_grid}}}};
}

Thresholds Thresholds::from_json(const nlohmann::json& j) {
  Thresholds t;
  auto get = [&](const char* group, const char* key, auto& field) {
    if (j.contains(group) && j[group].contains(key)) j[group][key].get_to(field);
  };
  get("clt_blocks", "ks_max", t.clt_ks_max);
  get("clt_blocks", "mean_sigmas", t.clt_mean_sigmas);
  get("clt_blocks", "variance_rel", t.clt_variance_rel);
  if (j.contains("clt_size") && j["clt_size"].contains("ks_max")) {
    t.size_ks_max.clear();
    for (const auto& [key, value] : j["clt_size"]["ks_max"].items()) t.size_ks_max[std::stoi(key)] = value.get<double>();
  }
  get("clt_size", "ks_default", t.size_ks_default);
  get("clt_size", "mean_rel", t.size_mean_rel);
  get("covariance", "standard_errors", t.covariance_standard_errors);
  get("largest_block", "epsilon", t.largest_epsilon);
  get("largest_block", "max_violation", t.largest_max_violation);
  get("largest_block", "tv_max", t.largest_tv_max);
  get("largest_block", "approx_factor", t.largest_approx_factor);
  get("largest_block", "window", t.largest_window);
  get("width", "mean_rel", t.width_mean_rel);
  get("width", "tail_abs", t.width_tail_abs);
  get("width", "second_moment_rel", t.width_second_moment_rel);
  get("width", "grid", t.width_grid);
  return t;
}

Thresholds load_thresholds(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open threshold config " + path);
  try {
    return Thresholds::from_json(nlohmann::json::parse(in));
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError("threshold config " + path + ": " + e.what());
  }
}

bool Check::pass() const {
  if (relation == "<") return value < limit;
  if (relation == "<=") return value <= limit;
  if (relation == ">=") return value >= limit;
  throw ValidationError("unknown check relation " + relation);
}

bool ExperimentReport::verdict() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass(); });
}

nlohmann::json ExperimentReport::to_json() const {
  nlohmann::json j;
  j["schema"] = 1;
  j["experiment_id"] = experiment_id;
  j["parameters"] = parameters;
  j["observed"] = observed;
  j["references"] = nlohmann::json::array();
  for (const auto& r : references) {
    nlohmann::json e{{"name", r.name}, {"value", r.value}, {"provenance", r.provenance}};
    if (!r.exact.empty()) e["exact"] = r.exact;
    j["references"].push_back(e);
  }
  j["checks"] = nlohmann::json::array();
  for (const auto& c : checks)
    j["checks"].push_back({{"name", c.name}, {"value", c.value}, {"relation", c.relation}, {"limit", c.limit}, {"pass", c.pass()}});
  if (!grid.empty()) j["grid"] = {{"columns", grid_columns}, {"rows", grid}};
  j["verdict"] = verdict() ? "pass" : "fail";
  return j;
}

std::string ExperimentReport::grid_csv() const {
  std::ostringstream out;
  out.precision(10);
  for (std::size_t i = 0; i < grid_columns.size(); ++i) out << (i ? "," : "") << grid_columns[i];
  out << '\n';
  for (const auto& row : grid) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << row[i];
    out << '\n';
  }
  return out.str();
}

ExperimentReport analyze_clt_blocks(int n, std::uint64_t seed, std::span<const SampleRecord> records,
                                    const Thresholds& th) {
  if (n < 2) throw DomainError("clt-blocks needs n >= 2");
  auto r = make_report("clt-blocks", n, static_cast<long>(records.size()), seed);
  std::vector<double> x;
  x.reserve(records.size());
  for (const auto& rec : records) x.push_back(rec.blocks);
  const Rational mean = mean_blocks(n);
  const Rational var = var_blocks_total(n);
  r.references.push_back(exact_reference("mean", mean));
  r.references.push_back(exact_reference("variance", var));
  const Moments m = moments(x);
  const double ks = normalized_ks(x, mean.get_d(), var.get_d());
  const double standard_error = std::sqrt(var.get_d() / static_cast<double>(x.size()));
  r.observed["mean"] = m.mean;
  r.observed["variance"] = m.variance;
  r.observed["ks"] = ks;
  r.checks.push_back({"ks_to_normal", ks, "<", th.clt_ks_max});
  r.checks.push_back({"mean_in_sigmas", std::abs(m.mean - mean.get_d()) / standard_error, "<=", th.clt_mean_sigmas});
  r.checks.push_back({"variance_rel_error", std::abs(m.variance / var.get_d() - 1), "<=", th.clt_variance_rel});
  return r;
}

ExperimentReport analyze_clt_blocks_of_size(int n, int l, std::uint64_t seed, std::span<const SampleRecord> records,
                                            const Thresholds& th) {
  check_tracked(l);
  if (l > n) throw DomainError("clt-size needs l <= n");
  auto r = make_report("clt-size", n, static_cast<long>(records.size()), seed);
  r.parameters["l"] = l;
  std::vector<double> x;
  x.reserve(records.size());
  for (const auto& rec : records) x.push_back(rec.of_size[static_cast<std::size_t>(l - 1)]);
  const Rational mean = mean_blocks_of_size(n, l);
  const Rational var = variance_blocks_of_size(n, l);
  const double profile = std::ldexp(1.0, -(l + 1));
  r.references.push_back(exact_reference("mean", mean));
  r.references.push_back(exact_reference("variance", var));
  r.references.push_back(asymptotic_reference("mean_over_n", profile));
  const Moments m = moments(x);
  const double ks = normalized_ks(x, mean.get_d(), var.get_d());
  r.observed["mean"] = m.mean;
  r.observed["variance"] = m.variance;
  r.observed["mean_over_n"] = m.mean / n;
  r.observed["ks"] = ks;
  r.checks.push_back({"ks_to_normal", ks, "<", th.size_ks_for(l)});
  r.checks.push_back({"mean_over_n_rel_error", std::abs(m.mean / n / profile - 1), "<=", th.size_mean_rel});
  return r;
}

ExperimentReport analyze_negative_correlation(int n, int k, int l, std::uint64_t seed,
                                              std::span<const SampleRecord> records, const Thresholds& th) {
  check_tracked(k);
  check_tracked(l);
  if (k == l) throw DomainError("covariance needs k != l");
  if (records.size() < 2) throw DomainError("covariance needs at least two samples");
  auto r = make_report("covariance", n, static_cast<long>(records.size()), seed);
  r.parameters["k"] = k;
  r.parameters["l"] = l;
  std::vector<double> a;
  std::vector<double> b;
  for (const auto& rec : records) {
    a.push_back(rec.of_size[static_cast<std::size_t>(k - 1)]);
    b.push_back(rec.of_size[static_cast<std::size_t>(l - 1)]);
  }
  const Moments ma = moments(a);
  const Moments mb = moments(b);
  std::vector<double> products(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) products[i] = (a[i] - ma.mean) * (b[i] - mb.mean);
  const Moments mp = moments(products);
  const auto total = static_cast<double>(a.size());
  const double cov = mp.mean * total / (total - 1);
  const double standard_error = std::sqrt(mp.variance / total);
  const Rational exact = covariance(n, k, l);
  r.references.push_back(exact_reference("covariance", exact));
  r.references.push_back(asymptotic_reference("covariance_leading", asymptotic_cov(k, l, n)));
  r.observed["covariance"] = cov;
  r.observed["standard_error"] = standard_error;
  r.checks.push_back({"exact_covariance", exact.get_d(), "<", 0});
  r.checks.push_back({"empirical_covariance", cov, "<", 0});
  r.checks.push_back({"standard_errors_from_exact", std::abs(cov - exact.get_d()) / standard_error, "<=",
                      th.covariance_standard_errors});
  return r;
}

double largest_block_approx_gap(int n, int window) {
  const int centre = floor_log2(n);
  double gap = 0;
  for (int k = std::max(1, centre - window); k <= std::min(n, centre + window); ++k)
    gap = std::max(gap, std::abs(largest_block_cdf_exact(n, k).get_d() - largest_block_cdf_approx(n, k)));
  return gap;
}

ExperimentReport analyze_largest_block(int n, std::uint64_t seed, std::span<const SampleRecord> records,
                                       const Thresholds& th) {
  if (n < 4) throw DomainError("largest-block needs n >= 4");
  if (records.empty()) throw DomainError("largest-block needs samples");
  auto r = make_report("largest-block", n, static_cast<long>(records.size()), seed);
  const double log2n = std::log2(static_cast<double>(n));
  const auto total = static_cast<double>(records.size());
  int top = 0;
  long violations = 0;
  for (const auto& rec : records) {
    top = std::max(top, rec.largest);
    if (std::abs(rec.largest / log2n - 1) > th.largest_epsilon) ++violations;
  }
  r.observed["concentration_violation"] = violations / total;
  r.checks.push_back({"concentration_violation", violations / total, "<=", th.largest_max_violation});

  const int centre = floor_log2(n);
  const int k_max = std::min(n, std::max(top, centre + th.largest_window));
  std::vector<long> counts(static_cast<std::size_t>(k_max) + 1, 0);
  for (const auto& rec : records) ++counts[static_cast<std::size_t>(rec.largest)];
  r.grid_columns = {"k", "empirical_cdf", "exact_cdf", "approx_cdf"};
  if (n <= kMaxBlockSeriesGuard) {
    double tv = 0;
    double previous = 0;
    double empirical = 0;
    for (int k = 1; k <= k_max; ++k) {
      const double exact = largest_block_cdf_exact(n, k).get_d();
      empirical += counts[static_cast<std::size_t>(k)] / total;
      tv += std::abs(counts[static_cast<std::size_t>(k)] / total - (exact - previous));
      previous = exact;
      r.grid.push_back({double(k), empirical, exact, largest_block_cdf_approx(n, k)});
    }
    tv = (tv + (1 - previous)) / 2;
    const double gap = largest_block_approx_gap(n, th.largest_window);
    const double ln = std::log(static_cast<double>(n));
    r.observed["total_variation"] = tv;
    r.observed["approx_gap"] = gap;
    r.checks.push_back({"total_variation", tv, "<", th.largest_tv_max});
    r.checks.push_back({"approx_gap", gap, "<", th.largest_approx_factor * ln * ln / n});
  } else {
    double empirical = 0;
    for (int k = 1; k <= k_max; ++k) {
      empirical += counts[static_cast<std::size_t>(k)] / total;
      r.grid.push_back({double(k), empirical, std::nan(""), largest_block_cdf_approx(n, k)});
    }
  }
  return r;
}

ExperimentReport analyze_width(int n, std::uint64_t seed, std::span<const SampleRecord> records,
                               const Thresholds& th) {
  if (n < 16) throw DomainError("width needs n >= 16");
  if (records.empty()) throw DomainError("width needs samples");
  auto r = make_report("width", n, static_cast<long>(records.size()), seed);
  std::vector<double> w;
  for (const auto& rec : records) w.push_back(rec.width);
  const Moments m = moments(w);
  double second = 0;
  for (double v : w) second += v * v;
  second /= static_cast<double>(w.size());
  const double mean_ref = mean_width_asymptotic(n);
  const double second_ref = width_moment(2, n);
  r.references.push_back(asymptotic_reference("mean", mean_ref));
  r.references.push_back(asymptotic_reference("second_moment", second_ref));
  r.observed["mean"] = m.mean;
  r.observed["second_moment"] = second;
  r.checks.push_back({"mean_rel_error", std::abs(m.mean / mean_ref - 1), "<=", th.width_mean_rel});
  r.checks.push_back({"second_moment_rel_error", std::abs(second / second_ref - 1), "<=", th.width_second_moment_rel});

  r.grid_columns = {"x", "empirical_tail", "theta"};
  const double scale = std::sqrt(static_cast<double>(n)) / 2;
  for (double x : th.width_grid) {
    const double threshold = std::ceil(x * scale);
    const auto hits = std::count_if(w.begin(), w.end(), [&](double v) { return v >= threshold; });
    const double tail = static_cast<double>(hits) / static_cast<double>(w.size());
    const double theta = theta_tail(x);
    r.grid.push_back({x, tail, theta});
    if (x == 1.0) {
      r.references.push_back(asymptotic_reference("theta_at_1", theta));
      r.observed["tail_at_1"] = tail;
      r.checks.push_back({"tail_at_1_abs_error", std::abs(tail - theta), "<=", th.width_tail_abs});
    }
  }
  return r;
}

ExperimentReport run_clt_blocks(int n, long samples, std::uint64_t seed, const RunOptions& o) {
  return analyze_clt_blocks(n, seed, sample_statistics(n, samples, seed, o.threads), o.thresholds);
}

ExperimentReport run_clt_blocks_of_size(int n, int l, long samples, std::uint64_t seed, const RunOptions& o) {
  return analyze_clt_blocks_of_size(n, l, seed, sample_statistics(n, samples, seed, o.threads), o.thresholds);
}

ExperimentReport run_negative_correlation(int n, int k, int l, long samples, std::uint64_t seed,
                                          const RunOptions& o) {
  return analyze_negative_correlation(n, k, l, seed, sample_statistics(n, samples, seed, o.threads), o.thresholds);
}

ExperimentReport run_largest_block(int n, long samples, std::uint64_t seed, const RunOptions& o) {
  return analyze_largest_block(n, seed, sample_statistics(n, samples, seed, o.threads), o.thresholds);
}

ExperimentReport run_width(int n, long samples, std::uint64_t seed, const RunOptions& o) {
  return analyze_width(n, seed, sample_statistics(n, samples, seed, o.threads), o.thresholds);
}

std::vector<WidthPoint> export_width_process(int n, std::uint64_t seed) {
  if (n < 2) throw DomainError("width-process needs n >= 2");
  RngState rng(seed, 0);
  std::vector<Step> steps;
  std::vector<Step> scratch;
  sample_dyck_steps(n, rng, steps, scratch);
  DyckPartitionStats stats;
  stats.compute(steps, true);
  std::vector<WidthPoint> rows;
  const auto profile = stats.width_profile();
  for (std::size_t i = 0; i < profile.size(); ++i) rows.push_back({static_cast<int>(i) + 1, profile[i]});
  return rows;
}

}  // namespace ncpart
