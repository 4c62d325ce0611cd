#include "ncpart/bijections.hpp"

#include <algorithm>

#include "ncpart/error.hpp"

namespace ncpart {

namespace {

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

}  // namespace

NCPartition dyck_to_partition(const DyckPath& path) {
  const auto steps = path.steps();
  std::vector<Block> blocks;
  std::vector<Label> open;
  Label next_label = 0;
  bool in_run = false;
  for (Step s : steps) {
    if (s == Step::Up) {
      open.push_back(++next_label);
      in_run = false;
    } else {
      if (!in_run) blocks.emplace_back();
      in_run = true;
      blocks.back().push_back(open.back());
      open.pop_back();
    }
  }
  return make_nc_partition_unchecked(path.semilength(), std::move(blocks));
}

DyckPath partition_to_dyck(const NCPartition& partition) {
  const int n = partition.size();
  // closes[x] = size of the block whose maximum is x, else 0.
  std::vector<int> closes(idx(n) + 1, 0);
  for (const auto& b : partition.blocks()) closes[idx(b.back())] = static_cast<int>(b.size());
  std::vector<Step> steps;
  steps.reserve(idx(2 * n));
  for (Label x = 1; x <= n; ++x) {
    steps.push_back(Step::Up);
    steps.insert(steps.end(), idx(closes[idx(x)]), Step::Down);
  }
  return make_dyck_path_unchecked(std::move(steps));
}

PlanarTree dyck_to_planar_tree(const DyckPath& path) {
  std::vector<std::vector<int>> children(1);
  std::vector<int> parent{-1};
  int current = 0;
  for (Step s : path.steps()) {
    if (s == Step::Up) {
      const int child = static_cast<int>(children.size());
      children[idx(current)].push_back(child);
      children.emplace_back();
      parent.push_back(current);
      current = child;
    } else {
      current = parent[idx(current)];
    }
  }
  return PlanarTree::from_children(std::move(children));
}

DyckPath planar_tree_to_dyck(const PlanarTree& tree) {
  std::vector<Step> steps;
  steps.reserve(2 * (tree.vertex_count() - 1));
  // (vertex, index of next child to visit)
  std::vector<std::pair<int, std::size_t>> stack{{0, 0}};
  while (!stack.empty()) {
    auto& [v, next] = stack.back();
    const auto& kids = tree.children(v);
    if (next < kids.size()) {
      const int child = kids[next++];
      steps.push_back(Step::Up);
      stack.emplace_back(child, 0);
    } else {
      stack.pop_back();
      if (!stack.empty()) steps.push_back(Step::Down);
    }
  }
  return make_dyck_path_unchecked(std::move(steps));
}

NCPartition planar_tree_blocks(const PlanarTree& tree) {
  const auto count = tree.vertex_count();
  // Edge labels are preorder ranks of the lower endpoint.
  std::vector<Label> label(count, 0);
  std::vector<int> order;
  order.reserve(count);
  std::vector<int> stack{0};
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    label[idx(v)] = static_cast<Label>(order.size());
    order.push_back(v);
    const auto& kids = tree.children(v);
    for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.push_back(*it);
  }

  auto is_last_child = [&](int v) {
    return tree.children(tree.parent(v)).back() == v;
  };

  std::vector<Block> blocks;
  for (int v : order) {
    if (v == 0 || !tree.is_leaf(v)) continue;
    Block block{label[idx(v)]};
    int current = v;
    while (tree.parent(current) != 0 && is_last_child(current)) {
      current = tree.parent(current);
      block.push_back(label[idx(current)]);
    }
    blocks.push_back(std::move(block));
  }
  return NCPartition::from_blocks(static_cast<int>(count) - 1, std::move(blocks));
}

namespace {

struct BinaryBuilder {
  std::span<const Step> steps;
  std::vector<int> match;       // index of the up step matched by a down step
  std::vector<int> ups_before;  // number of up steps strictly before index i
  std::vector<BinaryTree::Node> nodes;

  // Builds the tree of steps[lo, hi) and returns its root index.
  int build(int lo, int hi) {
    const int self = static_cast<int>(nodes.size());
    nodes.emplace_back();
    if (lo == hi) return self;
    // The final down step closes the last primitive component.
    const int start = match[idx(hi - 1)];
    const int left = build(lo, start);
    const int right = build(start + 1, hi - 1);
    auto& node = nodes[idx(self)];
    node.left = left;
    node.right = right;
    node.left_label = ups_before[idx(start)] + 1;
    return self;
  }
};

}  // namespace

BinaryTree dyck_to_binary_tree(const DyckPath& path) {
  const auto steps = path.steps();
  BinaryBuilder builder{steps, std::vector<int>(steps.size(), -1),
                        std::vector<int>(steps.size() + 1, 0), {}};
  std::vector<int> open;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    builder.ups_before[i + 1] = builder.ups_before[i] + (steps[i] == Step::Up ? 1 : 0);
    if (steps[i] == Step::Up) {
      open.push_back(static_cast<int>(i));
    } else {
      builder.match[i] = open.back();
      open.pop_back();
    }
  }
  builder.nodes.reserve(steps.size() + 1);
  builder.build(0, static_cast<int>(steps.size()));
  return BinaryTree::from_nodes(std::move(builder.nodes));
}

DyckPath binary_tree_to_dyck(const BinaryTree& tree) {
  // word(leaf) = empty, word(node) = word(left) U word(right) D.
  std::vector<Step> steps;
  steps.reserve(tree.vertex_count());
  enum class Phase { Left, Right, Done };
  std::vector<std::pair<int, Phase>> stack{{0, Phase::Left}};
  while (!stack.empty()) {
    auto& [v, phase] = stack.back();
    if (tree.is_leaf(v)) {
      stack.pop_back();
      continue;
    }
    const auto& node = tree.node(v);
    if (phase == Phase::Left) {
      phase = Phase::Right;
      stack.emplace_back(node.left, Phase::Left);
    } else if (phase == Phase::Right) {
      phase = Phase::Done;
      steps.push_back(Step::Up);
      stack.emplace_back(node.right, Phase::Left);
    } else {
      steps.push_back(Step::Down);
      stack.pop_back();
    }
  }
  return make_dyck_path_unchecked(std::move(steps));
}

NCPartition binary_tree_blocks(const BinaryTree& tree) {
  std::vector<Block> blocks;
  for (int v = 0; v < static_cast<int>(tree.vertex_count()); ++v) {
    if (!tree.is_leaf(v)) continue;
    const int p = tree.parent(v);
    if (p < 0 || tree.node(p).right != v) continue;
    Block block;
    int current = v;
    for (int up = tree.parent(current); up >= 0 && tree.node(up).right == current;
         current = up, up = tree.parent(current)) {
      const Label label = tree.node(up).left_label;
      if (label <= 0) throw ValidationError("binary tree vertex " + std::to_string(up) + " has no left-edge label");
      block.push_back(label);
    }
    blocks.push_back(std::move(block));
  }
  return NCPartition::from_blocks(tree.semilength(), std::move(blocks));
}

NCPairing double_partition(const NCPartition& partition) {
  std::vector<Pair> pairs;
  pairs.reserve(idx(partition.size()));
  for (const auto& b : partition.blocks()) {
    pairs.push_back({2 * b.front() - 1, 2 * b.back()});
    for (std::size_t i = 0; i + 1 < b.size(); ++i) pairs.push_back({2 * b[i], 2 * b[i + 1] - 1});
  }
  return NCPairing::from_pairs(2 * partition.size(), std::move(pairs));
}

NCPartition undouble(const NCPairing& pairing) {
  const int n = pairing.size() / 2;
  // next[x] = successor of x inside its block, 0 if x is the block maximum.
  std::vector<Label> next(idx(n) + 1, 0);
  std::vector<Label> outer_end(idx(n) + 1, 0);
  for (const auto& [a, b] : pairing.pairs()) {
    if (a % 2 == 1 && b % 2 == 0) {
      outer_end[idx((a + 1) / 2)] = b / 2;
    } else if (a % 2 == 0 && b % 2 == 1) {
      next[idx(a / 2)] = (b + 1) / 2;
    } else {
      throw ValidationError("pair (" + std::to_string(a) + "," + std::to_string(b) +
                            ") joins two copies of the same side; not a doubled pairing");
    }
  }
  std::vector<Block> blocks;
  for (Label x = 1; x <= n; ++x) {
    if (outer_end[idx(x)] == 0) continue;
    Block block{x};
    while (next[idx(block.back())] != 0) block.push_back(next[idx(block.back())]);
    if (block.back() != outer_end[idx(x)])
      throw ValidationError("outer pair of block starting at " + std::to_string(x) +
                            " does not close at the block maximum");
    blocks.push_back(std::move(block));
  }
  auto partition = NCPartition::from_blocks(n, std::move(blocks));
  if (double_partition(partition) != pairing) throw ValidationError("pairing is not in the image of doubling");
  return partition;
}

DyckPath pairing_to_dyck(const NCPairing& pairing) {
  std::vector<Step> steps(idx(pairing.size()), Step::Down);
  for (const auto& p : pairing.pairs()) steps[idx(p.first - 1)] = Step::Up;
  return make_dyck_path_unchecked(std::move(steps));
}

NCPairing dyck_to_pairing(const DyckPath& path) {
  const auto steps = path.steps();
  std::vector<Pair> pairs;
  std::vector<Label> open;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const Label pos = static_cast<Label>(i + 1);
    if (steps[i] == Step::Up) {
      open.push_back(pos);
    } else {
      pairs.push_back({open.back(), pos});
      open.pop_back();
    }
  }
  return NCPairing::from_pairs(static_cast<int>(steps.size()), std::move(pairs));
}

}  // namespace ncpart
