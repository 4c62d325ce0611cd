#include "ncpart/sampling.hpp"

#include <algorithm>

#include "ncpart/bijections.hpp"
#include "ncpart/error.hpp"

namespace ncpart {

RngState::RngState(std::uint64_t seed, std::uint64_t stream_id) : seed_(seed), stream_(stream_id) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream_id), static_cast<std::uint32_t>(stream_id >> 32)};
  engine_.seed(seq);
}

void sample_dyck_steps(int n, RngState& rng, std::vector<Step>& steps, std::vector<Step>& scratch) {
  if (n < 1) throw DomainError("sample_dyck needs n >= 1");
  const auto len = static_cast<std::size_t>(2 * n + 1);
  scratch.resize(len);
  std::fill(scratch.begin(), scratch.begin() + n, Step::Up);
  std::fill(scratch.begin() + n, scratch.end(), Step::Down);
  for (std::size_t i = len - 1; i > 0; --i) {
    const std::size_t j = rng.below(static_cast<std::uint32_t>(i + 1));
    std::swap(scratch[i], scratch[j]);
  }
  // Total is -1, so the minimum is negative and attained after >= 1 step.
  int height = 0;
  int lowest = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < len; ++i) {
    height += static_cast<int>(scratch[i]);
    if (height < lowest) {
      lowest = height;
      start = i + 1;
    }
  }
  steps.resize(len - 1);
  const std::size_t head = len - start;
  std::copy(scratch.begin() + static_cast<std::ptrdiff_t>(start), scratch.end(), steps.begin());
  std::copy(scratch.begin(), scratch.begin() + static_cast<std::ptrdiff_t>(start - 1),
            steps.begin() + static_cast<std::ptrdiff_t>(head));
}

DyckPath sample_dyck(int n, RngState& rng) {
  std::vector<Step> steps;
  std::vector<Step> scratch;
  sample_dyck_steps(n, rng, steps, scratch);
  return make_dyck_path_unchecked(std::move(steps));
}

NCPartition sample_nc_partition(int n, RngState& rng) { return dyck_to_partition(sample_dyck(n, rng)); }

}  // namespace ncpart
