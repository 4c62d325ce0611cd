#pragma once

#include <span>
#include <vector>

#include "ncpart/structures.hpp"

namespace ncpart {

/// X_n: number of blocks.
int num_blocks(const NCPartition& partition);

/// Entry l-1 counts the blocks of size l, for l = 1..n.
std::vector<int> block_size_histogram(const NCPartition& partition);

/// L_n: largest block size; 0 for the empty partition.
int largest_block(const NCPartition& partition);

/// w_x for x = 1..n-1 (entry x-1): the number of blocks b with
/// min(b) <= x < max(b). Within one block at most one arc spans a gap, so this
/// equals the number of arcs cut by the vertical line at x + 1/2.
std::vector<int> width_profile(const NCPartition& partition);

/// W_n = max of the width profile; 0 when n <= 1.
int width(const NCPartition& partition);

/// Maximum over gaps of the number of pairs (a, b) with a <= x < b.
int pairing_width(const NCPairing& pairing);

int dyck_height(const DyckPath& path);
/// Number of UD factors.
int dyck_peaks(const DyckPath& path);

/// Statistics of dyck_to_partition(path) computed straight from the steps in
/// one pass, without building the partition. Buffers are reused across calls,
/// so one instance per thread.
class DyckPartitionStats {
 public:
  void compute(std::span<const Step> steps, bool keep_profile = false);

  int size() const noexcept { return n_; }
  int num_blocks() const noexcept { return blocks_; }
  int largest_block() const noexcept { return largest_; }
  int width() const noexcept { return width_; }
  /// Number of blocks of size l (l >= 1); 0 beyond the largest block.
  int blocks_of_size(int l) const noexcept {
    return l >= 1 && l <= largest_ ? size_counts_[static_cast<std::size_t>(l)] : 0;
  }
  /// Valid after compute(..., keep_profile = true).
  std::span<const int> width_profile() const noexcept {
    if (profile_.empty()) return {};
    return {profile_.data() + 1, n_ > 1 ? static_cast<std::size_t>(n_ - 1) : 0};
  }

 private:
  int n_ = 0;
  int blocks_ = 0;
  int largest_ = 0;
  int width_ = 0;
  std::vector<int> size_counts_;
  std::vector<int> stack_;
  std::vector<int> profile_;
};

}  // namespace ncpart
