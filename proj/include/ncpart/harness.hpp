#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

namespace ncpart {

/// Samples per substream. Chunk c of a run draws from RngState(seed, c), so
/// the stream id depends on the sample index only and results do not depend
/// on the worker count.
inline constexpr long kChunkSize = 1000;

/// Block sizes l = 1..kTrackedSizes are recorded per sample.
inline constexpr int kTrackedSizes = 8;

struct SampleRecord {
  int blocks = 0;
  int largest = 0;
  int width = 0;
  std::array<int, kTrackedSizes> of_size{};  // entry l-1
};

/// Draws `samples` uniform NC partitions of [n] and returns their statistics
/// in sample order. threads <= 0 means hardware concurrency.
std::vector<SampleRecord> sample_statistics(int n, long samples, std::uint64_t seed, int threads = 0);

/// Sup over the sample of |F_emp - cdf|, taking both one-sided gaps at every
/// distinct sample value. `samples` must be sorted. Throws DomainError when
/// empty.
double ks_distance(std::span<const double> samples, const std::function<double(double)>& cdf);

/// Declared acceptance thresholds for the experiment runners. Defaults match
/// config/experiments.json; load_thresholds overrides any subset.
struct Thresholds {
  double clt_ks_max = 0.02;
  double clt_mean_sigmas = 3.0;
  double clt_variance_rel = 0.05;
  std::map<int, double> size_ks_max{{1, 0.02}, {2, 0.03}, {3, 0.03}};
  double size_ks_default = 0.03;
  double size_mean_rel = 0.05;
  double covariance_standard_errors = 3.0;
  double largest_epsilon = 0.25;
  double largest_max_violation = 0.05;
  double largest_tv_max = 0.01;
  double largest_approx_factor = 10.0;  // times log(n)^2 / n
  int largest_window = 5;
  double width_mean_rel = 0.02;
  double width_tail_abs = 0.01;  // at the grid point x = 1
  double width_second_moment_rel = 0.05;
  std::vector<double> width_grid{0.5, 0.75, 1.0, 1.25, 1.5, 1.75, 2.0, 2.25, 2.5};

  double size_ks_for(int l) const;
  nlohmann::json to_json() const;
  static Thresholds from_json(const nlohmann::json& j);
};

Thresholds load_thresholds(const std::string& path);

struct RunOptions {
  int threads = 0;
  Thresholds thresholds{};
};

/// A named check: pass iff value `relation` limit, relation one of "<", "<=", ">=".
struct Check {
  std::string name;
  double value = 0;
  std::string relation;
  double limit = 0;
  bool pass() const;
};

struct Reference {
  std::string name;
  double value = 0;
  std::string provenance;  // "exact" or "asymptotic"
  std::string exact;       // rational text when provenance is exact
};

struct ExperimentReport {
  std::string experiment_id;
  std::map<std::string, long long> parameters;
  std::map<std::string, double> observed;
  std::vector<Reference> references;
  std::vector<Check> checks;
  /// Grid output (e.g. tail or CDF tables); one row per entry.
  std::vector<std::string> grid_columns;
  std::vector<std::vector<double>> grid;

  bool verdict() const;
  nlohmann::json to_json() const;
  std::string grid_csv() const;
};

ExperimentReport run_clt_blocks(int n, long samples, std::uint64_t seed, const RunOptions& options = {});
ExperimentReport run_clt_blocks_of_size(int n, int l, long samples, std::uint64_t seed,
                                        const RunOptions& options = {});
ExperimentReport run_negative_correlation(int n, int k, int l, long samples, std::uint64_t seed,
                                          const RunOptions& options = {});
ExperimentReport run_largest_block(int n, long samples, std::uint64_t seed, const RunOptions& options = {});
ExperimentReport run_width(int n, long samples, std::uint64_t seed, const RunOptions& options = {});

// The same analyses on records already drawn (sample_statistics(n, ..., seed)).
ExperimentReport analyze_clt_blocks(int n, std::uint64_t seed, std::span<const SampleRecord> records,
                                    const Thresholds& thresholds);
ExperimentReport analyze_clt_blocks_of_size(int n, int l, std::uint64_t seed,
                                            std::span<const SampleRecord> records,
                                            const Thresholds& thresholds);
ExperimentReport analyze_negative_correlation(int n, int k, int l, std::uint64_t seed,
                                              std::span<const SampleRecord> records,
                                              const Thresholds& thresholds);
ExperimentReport analyze_largest_block(int n, std::uint64_t seed, std::span<const SampleRecord> records,
                                       const Thresholds& thresholds);
ExperimentReport analyze_width(int n, std::uint64_t seed, std::span<const SampleRecord> records,
                               const Thresholds& thresholds);

/// Exact CDF of L_n against the double-exponential approximation over
/// k in floor(log2 n) +- window; returns the maximum absolute difference.
double largest_block_approx_gap(int n, int window);

struct WidthPoint {
  int x = 0;
  int w = 0;
};

/// Width profile of one partition drawn from RngState(seed, 0): rows x = 1..n-1.
std::vector<WidthPoint> export_width_process(int n, std::uint64_t seed);

}  // namespace ncpart
