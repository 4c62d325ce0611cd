#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "ncpart/structures.hpp"

namespace ncpart {

/// Seeded random source. The engine is std::mt19937_64, initialized through
/// std::seed_seq from the four 32-bit halves of (seed, stream_id). Both are
/// fully specified by the C++ standard, so a given (seed, stream_id) yields the
/// same sequence on every conforming platform. Not thread-safe; give each
/// worker its own stream id.
class RngState {
 public:
  RngState(std::uint64_t seed, std::uint64_t stream_id);

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t stream_id() const noexcept { return stream_; }

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform integer in [0, bound), bound >= 1. Lemire's multiply-and-reject
  /// on one 64-bit engine output; exact, no modulo bias.
  std::uint32_t below(std::uint32_t bound) {
    unsigned __int128 product = static_cast<unsigned __int128>(engine_()) * bound;
    auto low = static_cast<std::uint64_t>(product);
    if (low < bound) {
      const std::uint64_t floor = (0 - static_cast<std::uint64_t>(bound)) % bound;
      while (low < floor) {
        product = static_cast<unsigned __int128>(engine_()) * bound;
        low = static_cast<std::uint64_t>(product);
      }
    }
    return static_cast<std::uint32_t>(product >> 64);
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t seed_;
  std::uint64_t stream_;
  std::mt19937_64 engine_;
};

/// Uniform Dyck path of semilength n >= 1 by the cycle lemma: shuffle n ups
/// and n + 1 downs (Fisher-Yates), rotate to start right after the first
/// position where the prefix sum hits its minimum, drop the final down.
/// Each Dyck path has exactly 2n + 1 preimages, so the output is uniform.
DyckPath sample_dyck(int n, RngState& rng);

/// Allocation-free variant for hot loops. `steps` receives 2n entries;
/// `scratch` is reused between calls.
void sample_dyck_steps(int n, RngState& rng, std::vector<Step>& steps, std::vector<Step>& scratch);

/// dyck_to_partition(sample_dyck(n, rng)); uniform over NC(n).
NCPartition sample_nc_partition(int n, RngState& rng);

}  // namespace ncpart
