// Command line front end for the ncpart library.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>

#include "ncpart/acceptance.hpp"
#include "ncpart/bijections.hpp"
#include "ncpart/error.hpp"
#include "ncpart/exact.hpp"
#include "ncpart/harness.hpp"
#include "ncpart/limitlaws.hpp"
#include "ncpart/sampling.hpp"
#include "ncpart/statistics.hpp"

using namespace ncpart;

namespace {

struct Common {
  int n = 100;
  int l = 1;
  int k = 2;
  long samples = 10000;
  std::uint64_t seed = 0;
  int threads = 0;
  std::string out;
  std::string format = "json";
  std::string config;
  std::string kind = "partition";
  std::string partition;
  std::vector<int> only;
  int guard = kPolynomialGuard;
  int series_guard = kMaxBlockSeriesGuard;
};

void emit(const Common& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(c.out);
  if (!file) throw ValidationError("cannot write " + c.out);
  file << text;
}

nlohmann::json rational_json(const Rational& r) {
  return {{"num", r.get_num().get_str()}, {"den", r.get_den().get_str()}, {"decimal", r.get_d()}};
}

RunOptions options(const Common& c) {
  RunOptions o;
  o.threads = c.threads;
  if (!c.config.empty()) o.thresholds = load_thresholds(c.config);
  return o;
}

int report(const Common& c, const ExperimentReport& r) {
  emit(c, c.format == "csv" ? r.grid_csv() : r.to_json().dump(2) + "\n");
  return r.verdict() ? 0 : 1;
}

void add_format(CLI::App* sub, Common& c) {
  sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  sub->add_option("--out", c.out, "Write output to this path instead of stdout");
}

void add_sampling(CLI::App* sub, Common& c) {
  sub->add_option("--samples", c.samples, "Number of samples")->check(CLI::PositiveNumber);
  sub->add_option("--seed", c.seed, "Base seed; chunk i of 1000 samples uses stream id i");
  sub->add_option("--threads", c.threads, "Worker threads (0 = all cores)");
  sub->add_option("--config", c.config, "Threshold config (JSON), e.g. config/experiments.json");
}

std::string enumerate_text(const Common& c) {
  std::ostringstream out;
  if (c.kind == "dyck") {
    for_each_dyck_path(c.n, [&](const DyckPath& p) { out << p.to_string() << '\n'; });
  } else {
    for_each_nc_partition(c.n, [&](const NCPartition& p) { out << p.to_string() << '\n'; });
  }
  return out.str();
}

std::string sample_text(const Common& c) {
  std::ostringstream out;
  // Same stream layout as the harness: chunk i of kChunkSize samples uses stream id i.
  for (long chunk = 0; chunk * kChunkSize < c.samples; ++chunk) {
    RngState rng(c.seed, static_cast<std::uint64_t>(chunk));
    for (long j = chunk * kChunkSize; j < std::min(c.samples, (chunk + 1) * kChunkSize); ++j) {
      const DyckPath path = sample_dyck(c.n, rng);
      out << (c.kind == "dyck" ? path.to_string() : dyck_to_partition(path).to_string()) << '\n';
    }
  }
  return out.str();
}

std::string stats_text(const Common& c) {
  NCPartition p;
  if (!c.partition.empty()) {
    p = NCPartition::parse(c.partition);
  } else {
    RngState rng(c.seed, 0);
    p = sample_nc_partition(c.n, rng);
  }
  const auto hist = block_size_histogram(p);
  const auto profile = width_profile(p);
  std::ostringstream out;
  if (c.format == "csv") {
    out << "statistic,value\n"
        << "n," << p.size() << "\nblocks," << num_blocks(p) << "\nlargest_block," << largest_block(p) << "\nwidth,"
        << width(p) << '\n';
    for (std::size_t l = 0; l < hist.size(); ++l)
      if (hist[l]) out << "blocks_of_size_" << l + 1 << ',' << hist[l] << '\n';
    out << "\nx,w\n";
    for (std::size_t x = 0; x < profile.size(); ++x) out << x + 1 << ',' << profile[x] << '\n';
  } else {
    nlohmann::json j{{"schema", 1},
                     {"partition", p.to_string()},
                     {"n", p.size()},
                     {"blocks", num_blocks(p)},
                     {"histogram", hist},
                     {"largest_block", largest_block(p)},
                     {"width", width(p)},
                     {"width_profile", profile}};
    out << j.dump(2) << '\n';
  }
  return out.str();
}

std::string exact_text(const Common& c) {
  nlohmann::json j{{"schema", 1}, {"n", c.n}};
  j["catalan"] = catalan(c.n).get_str();
  if (c.n >= 1) {
    j["mean_blocks"] = rational_json(mean_blocks(c.n));
    j["var_blocks_total"] = rational_json(var_blocks_total(c.n));
  }
  if (c.l >= 1 && c.l <= c.n) {
    j["l"] = c.l;
    j["mean_blocks_of_size"] = rational_json(mean_blocks_of_size(c.n, c.l));
    j["second_factorial_moment"] = rational_json(second_factorial_moment(c.n, c.l));
    j["variance_blocks_of_size"] = rational_json(variance_blocks_of_size(c.n, c.l));
    j["asymptotic_var"] = asymptotic_var(c.l, c.n);
    j["blocks_polynomial"] = blocks_polynomial(c.n, c.l, c.guard).to_string('q');
    if (c.k >= 1 && c.k <= c.n && c.k != c.l) {
      j["k"] = c.k;
      j["covariance"] = rational_json(covariance(c.n, c.k, c.l));
      j["asymptotic_cov"] = asymptotic_cov(c.k, c.l, c.n);
    }
  }
  if (c.k >= 1 && c.k <= c.n && c.n >= 1) j["largest_block_cdf"] = rational_json(largest_block_cdf_exact(c.n, c.k, c.series_guard));
  return j.dump(2) + "\n";
}

std::string singularity_text(const Common& c) {
  const auto s = solve_characteristic_maxblock(c.k);
  nlohmann::json j{{"schema", 1},
                   {"k", c.k},
                   {"z0", s.z0.str(40)},
                   {"y0", s.y0.str(40)},
                   {"gamma", s.gamma.str(40)},
                   {"residual_equation", s.residual_equation.str(3)},
                   {"residual_derivative", s.residual_derivative.str(3)},
                   {"iterations", s.iterations}};
  for (auto form : {MarkerForm::Plus, MarkerForm::Minus}) {
    const auto d = movement_derivatives(c.l, form);
    j[form == MarkerForm::Plus ? "movement_printed" : "movement_block_gf"] = {
        {"l", c.l}, {"rho", d.rho}, {"first", d.first}, {"second", d.second}, {"variability", d.variability}};
  }
  if (c.n >= 3) {
    const auto a = asymptotic_count_check(c.k, c.n);
    j["asymptotic_count"] = {{"n", a.n},
                             {"fitted_rate", a.fitted_rate},
                             {"expected_rate", a.expected_rate},
                             {"rate_relative_error", a.rate_relative_error},
                             {"fitted_exponent", a.fitted_exponent},
                             {"fitted_constant", a.fitted_constant},
                             {"transfer_constant", a.transfer_constant}};
  }
  return j.dump(2) + "\n";
}

std::string width_process_text(const Common& c) {
  std::ostringstream out;
  out << "x,w\n";
  for (const auto& row : export_width_process(c.n, c.seed)) out << row.x << ',' << row.w << '\n';
  return out.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Random non-crossing partitions: exact formulas, sampling and limit-law checks"};
  app.require_subcommand(1);
  Common c;

  auto* enumerate = app.add_subcommand("enumerate", "List every NC partition (or Dyck path) of size n");
  enumerate->add_option("--n", c.n, "Size (0..14)")->required();
  enumerate->add_option("--kind", c.kind)->check(CLI::IsMember({"partition", "dyck"}));
  enumerate->add_option("--out", c.out);

  auto* sample = app.add_subcommand("sample", "Draw uniform NC partitions (or Dyck paths)");
  sample->add_option("--n", c.n)->required();
  sample->add_option("--samples", c.samples)->check(CLI::PositiveNumber);
  sample->add_option("--seed", c.seed);
  sample->add_option("--kind", c.kind)->check(CLI::IsMember({"partition", "dyck"}));
  sample->add_option("--out", c.out);

  auto* stats = app.add_subcommand("stats", "Statistics of a given or sampled partition");
  stats->add_option("--partition", c.partition, "Canonical text, e.g. {1,2,5,6,7,8}|{3,4}|{9}");
  stats->add_option("--n", c.n);
  stats->add_option("--seed", c.seed);
  add_format(stats, c);

  auto* exact = app.add_subcommand("exact", "Exact moments, polynomials and CDF values");
  exact->add_option("--n", c.n)->required();
  exact->add_option("--l", c.l);
  exact->add_option("--k", c.k);
  exact->add_option("--guard", c.guard, "Size guard for polynomial extraction");
  exact->add_option("--series-guard", c.series_guard, "Size guard for the largest-block CDF");
  exact->add_option("--out", c.out);

  auto* clt_blocks = app.add_subcommand("clt-blocks", "Normalized block count vs the standard normal");
  auto* clt_size = app.add_subcommand("clt-size", "Normalized count of size-l blocks vs the standard normal");
  auto* cov = app.add_subcommand("covariance", "Empirical vs exact covariance of size-k and size-l counts");
  auto* largest = app.add_subcommand("largest-block", "Largest block: concentration and CDF comparisons");
  auto* width_cmd = app.add_subcommand("width", "Width: tails, mean and second moment");
  for (auto* sub : {clt_blocks, clt_size, cov, largest, width_cmd}) {
    sub->add_option("--n", c.n)->required();
    add_sampling(sub, c);
    add_format(sub, c);
  }
  clt_size->add_option("--l", c.l);
  cov->add_option("--k", c.k);
  cov->add_option("--l", c.l);

  auto* process = app.add_subcommand("width-process", "Width profile of one sampled partition (CSV)");
  process->add_option("--n", c.n)->required();
  process->add_option("--seed", c.seed);
  process->add_option("--out", c.out);

  auto* singularity = app.add_subcommand("singularity", "Characteristic system, movement function, growth fit");
  singularity->add_option("--k", c.k);
  singularity->add_option("--l", c.l);
  singularity->add_option("--n", c.n, "Fit coefficient growth at this n (skipped below 3)");
  singularity->add_option("--out", c.out);

  auto* verify = app.add_subcommand("verify-all", "Run acceptance criteria 1-9");
  verify->add_option("--threads", c.threads);
  verify->add_option("--only", c.only, "Run only these criteria (e.g. 1,2,8)")->delimiter(',');

  CLI11_PARSE(app, argc, argv);

  try {
    if (*enumerate) emit(c, enumerate_text(c));
    if (*sample) emit(c, sample_text(c));
    if (*stats) emit(c, stats_text(c));
    if (*exact) emit(c, exact_text(c));
    if (*clt_blocks) return report(c, run_clt_blocks(c.n, c.samples, c.seed, options(c)));
    if (*clt_size) return report(c, run_clt_blocks_of_size(c.n, c.l, c.samples, c.seed, options(c)));
    if (*cov) return report(c, run_negative_correlation(c.n, c.k, c.l, c.samples, c.seed, options(c)));
    if (*largest) return report(c, run_largest_block(c.n, c.samples, c.seed, options(c)));
    if (*width_cmd) return report(c, run_width(c.n, c.samples, c.seed, options(c)));
    if (*process) emit(c, width_process_text(c));
    if (*singularity) emit(c, singularity_text(c));
    if (*verify) {
      const auto results = run_acceptance(std::cout, c.threads, {c.only.begin(), c.only.end()});
      long failed = 0;
      for (const auto& r : results) failed += r.pass ? 0 : 1;
      std::cout << (failed ? "FAILED: " : "all passed: ") << results.size() - failed << "/" << results.size() << '\n';
      return failed ? 1 : 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
