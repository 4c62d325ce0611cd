#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ncpart {

using Label = int;
using Block = std::vector<Label>;

/// Largest n accepted by the exhaustive enumerators.
inline constexpr int kEnumerationLimit = 14;

/// True iff `blocks` (a set partition of {1..n}) has no crossing quadruple
/// a < b < c < d with a, c in one block and b, d in another. Single stack
/// sweep, O(n). Throws ValidationError when `blocks` is not a set partition
/// of {1..n} (empty block, label out of range, missing or repeated label).
bool is_noncrossing(int n, std::span<const Block> blocks);

/// A non-crossing partition of {1..n}. Blocks are sorted internally and
/// ordered by their minimum element, so structural equality is well defined.
/// n = 0 is the empty partition with no blocks.
class NCPartition {
 public:
  NCPartition() = default;

  /// Validates and canonicalizes. Throws ValidationError.
  static NCPartition from_blocks(int n, std::vector<Block> blocks);

  /// Parses the canonical text form `{1,2,5,6,7,8}|{3,4}|{9}`. The empty
  /// string is the empty partition. n is the number of labels read.
  static NCPartition parse(std::string_view text);

  int size() const noexcept { return n_; }
  const std::vector<Block>& blocks() const noexcept { return blocks_; }
  std::size_t num_blocks() const noexcept { return blocks_.size(); }

  std::string to_string() const;

  friend bool operator==(const NCPartition&, const NCPartition&) = default;
  friend auto operator<=>(const NCPartition&, const NCPartition&) = default;

 private:
  NCPartition(int n, std::vector<Block> blocks)
      : n_(n), blocks_(std::move(blocks)) {}

  int n_ = 0;
  std::vector<Block> blocks_;

  friend NCPartition make_nc_partition_unchecked(int n, std::vector<Block> blocks);
};

/// Canonicalizes block order without validating. For bijections whose
/// output is non-crossing by construction.
NCPartition make_nc_partition_unchecked(int n, std::vector<Block> blocks);

enum class Step : std::int8_t { Up = 1, Down = -1 };

/// Balanced +1/-1 sequence with nonnegative prefix sums.
class DyckPath {
 public:
  DyckPath() = default;

  /// Throws ValidationError if the sequence is not a Dyck path.
  static DyckPath from_steps(std::vector<Step> steps);
  /// Parses `UUDD...`. Throws ValidationError.
  static DyckPath parse(std::string_view text);

  /// Half the length; the number of up steps.
  int semilength() const noexcept { return static_cast<int>(steps_.size() / 2); }
  std::span<const Step> steps() const noexcept { return steps_; }
  std::string to_string() const;

  friend bool operator==(const DyckPath&, const DyckPath&) = default;
  friend auto operator<=>(const DyckPath&, const DyckPath&) = default;

 private:
  explicit DyckPath(std::vector<Step> steps) : steps_(std::move(steps)) {}
  std::vector<Step> steps_;

  friend DyckPath make_dyck_path_unchecked(std::vector<Step> steps);
};

/// Skips validation. For callers that construct Dyck paths by a method that
/// guarantees the invariants (samplers, bijections).
DyckPath make_dyck_path_unchecked(std::vector<Step> steps);

/// Rooted ordered tree. Vertex 0 is the root; children are ordered.
class PlanarTree {
 public:
  PlanarTree() : children_(1) {}

  /// Throws ValidationError unless the lists describe a tree rooted at 0
  /// spanning every vertex.
  static PlanarTree from_children(std::vector<std::vector<int>> children);

  std::size_t vertex_count() const noexcept { return children_.size(); }
  const std::vector<int>& children(int v) const { return children_.at(static_cast<std::size_t>(v)); }
  int parent(int v) const { return parent_.at(static_cast<std::size_t>(v)); }
  bool is_leaf(int v) const { return children(v).empty(); }
  std::size_t leaf_count() const;

  friend bool operator==(const PlanarTree& a, const PlanarTree& b) {
    return a.children_ == b.children_;
  }

 private:
  std::vector<std::vector<int>> children_;
  std::vector<int> parent_{-1};
};

/// Full binary tree (every vertex has 0 or 2 children), root at index 0.
/// Internal vertices may carry the label of their left edge.
class BinaryTree {
 public:
  struct Node {
    int left = -1;
    int right = -1;
    /// Label of the left edge; 0 when unlabeled.
    Label left_label = 0;

    friend bool operator==(const Node&, const Node&) = default;
  };

  BinaryTree() : nodes_(1), parent_{-1} {}

  /// Throws ValidationError unless the nodes form a full binary tree rooted
  /// at 0 with every vertex reachable.
  static BinaryTree from_nodes(std::vector<Node> nodes);

  std::size_t vertex_count() const noexcept { return nodes_.size(); }
  /// n for a tree on 2n + 1 vertices.
  int semilength() const noexcept { return static_cast<int>(nodes_.size() / 2); }
  const Node& node(int v) const { return nodes_.at(static_cast<std::size_t>(v)); }
  int parent(int v) const { return parent_.at(static_cast<std::size_t>(v)); }
  bool is_leaf(int v) const { return node(v).left < 0; }

  friend bool operator==(const BinaryTree& a, const BinaryTree& b) {
    return a.nodes_ == b.nodes_;
  }

 private:
  std::vector<Node> nodes_;
  std::vector<int> parent_;
};

struct Pair {
  Label first;
  Label second;

  friend bool operator==(const Pair&, const Pair&) = default;
  friend auto operator<=>(const Pair&, const Pair&) = default;
};

/// Non-crossing perfect matching of {1..m}, pairs sorted by first element.
class NCPairing {
 public:
  NCPairing() = default;

  /// Throws ValidationError unless `pairs` is a non-crossing perfect
  /// matching of {1..m}.
  static NCPairing from_pairs(int m, std::vector<Pair> pairs);
  /// Parses `(1,6)(2,5)(3,4)`.
  static NCPairing parse(std::string_view text);

  int size() const noexcept { return m_; }
  std::size_t num_pairs() const noexcept { return pairs_.size(); }
  const std::vector<Pair>& pairs() const noexcept { return pairs_; }
  std::string to_string() const;

  friend bool operator==(const NCPairing&, const NCPairing&) = default;

 private:
  int m_ = 0;
  std::vector<Pair> pairs_;
};

/// Visits every NC partition of {1..n} exactly once. Lexicographic
/// restricted-growth-string order filtered by is_noncrossing for n <= 8,
/// recursive construction (block of 1, then nested gaps) above that.
/// Throws GuardError unless 0 <= n <= kEnumerationLimit.
void for_each_nc_partition(int n, const std::function<void(const NCPartition&)>& visit);
std::vector<NCPartition> enumerate_nc(int n);

/// Visits every Dyck path of semilength n in lexicographic order (U < D).
void for_each_dyck_path(int n, const std::function<void(const DyckPath&)>& visit);
std::vector<DyckPath> enumerate_dyck(int n);

namespace detail {
// The two enumeration routes, exposed so tests can compare them.
void enumerate_nc_filtered(int n, const std::function<void(const NCPartition&)>& visit);
void enumerate_nc_recursive(int n, const std::function<void(const NCPartition&)>& visit);
}  // namespace detail

}  // namespace ncpart
