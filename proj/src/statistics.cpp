#include "ncpart/statistics.hpp"

#include <algorithm>

namespace ncpart {

namespace {
std::size_t idx(int i) { return static_cast<std::size_t>(i); }
}  // namespace

int num_blocks(const NCPartition& partition) { return static_cast<int>(partition.num_blocks()); }

std::vector<int> block_size_histogram(const NCPartition& partition) {
  std::vector<int> hist(idx(partition.size()), 0);
  for (const auto& b : partition.blocks()) ++hist[b.size() - 1];
  return hist;
}

int largest_block(const NCPartition& partition) {
  std::size_t best = 0;
  for (const auto& b : partition.blocks()) best = std::max(best, b.size());
  return static_cast<int>(best);
}

std::vector<int> width_profile(const NCPartition& partition) {
  const int n = partition.size();
  if (n <= 1) return {};
  // Difference array over gaps: block [lo, hi] spans gaps lo..hi-1.
  std::vector<int> diff(idx(n) + 1, 0);
  for (const auto& b : partition.blocks()) {
    ++diff[idx(b.front())];
    --diff[idx(b.back())];
  }
  std::vector<int> profile(idx(n - 1));
  int running = 0;
  for (int x = 1; x < n; ++x) {
    running += diff[idx(x)];
    profile[idx(x - 1)] = running;
  }
  return profile;
}

int width(const NCPartition& partition) {
  const auto profile = width_profile(partition);
  return profile.empty() ? 0 : *std::max_element(profile.begin(), profile.end());
}

int pairing_width(const NCPairing& pairing) {
  const int m = pairing.size();
  std::vector<int> diff(idx(m) + 2, 0);
  for (const auto& p : pairing.pairs()) {
    ++diff[idx(p.first)];
    --diff[idx(p.second)];
  }
  int running = 0;
  int best = 0;
  for (int x = 1; x < m; ++x) {
    running += diff[idx(x)];
    best = std::max(best, running);
  }
  return best;
}

int dyck_height(const DyckPath& path) {
  int height = 0;
  int best = 0;
  for (Step s : path.steps()) {
    height += static_cast<int>(s);
    best = std::max(best, height);
  }
  return best;
}

int dyck_peaks(const DyckPath& path) {
  const auto steps = path.steps();
  int peaks = 0;
  for (std::size_t i = 0; i + 1 < steps.size(); ++i)
    if (steps[i] == Step::Up && steps[i + 1] == Step::Down) ++peaks;
  return peaks;
}

void DyckPartitionStats::compute(std::span<const Step> steps, bool keep_profile) {
  n_ = static_cast<int>(steps.size() / 2);
  blocks_ = 0;
  largest_ = 0;
  width_ = 0;
  size_counts_.assign(idx(n_) + 1, 0);
  profile_.assign(idx(n_) + 1, 0);
  stack_.clear();

  // Each down run pops a block; its first pop is the block maximum (the up
  // step right before the run), its last pop is the block minimum.
  int label = 0;
  std::size_t i = 0;
  while (i < steps.size()) {
    if (steps[i] == Step::Up) {
      stack_.push_back(++label);
      ++i;
      continue;
    }
    const int hi = stack_.back();
    int lo = hi;
    int run = 0;
    while (i < steps.size() && steps[i] == Step::Down) {
      lo = stack_.back();
      stack_.pop_back();
      ++run;
      ++i;
    }
    ++blocks_;
    ++size_counts_[idx(run)];
    largest_ = std::max(largest_, run);
    ++profile_[idx(lo)];
    --profile_[idx(hi)];
  }

  // Prefix sums turn the difference array into w_x in place.
  int running = 0;
  for (int x = 1; x < n_; ++x) {
    running += profile_[idx(x)];
    profile_[idx(x)] = running;
    width_ = std::max(width_, running);
  }
  if (!keep_profile) profile_.clear();
}

}  // namespace ncpart
