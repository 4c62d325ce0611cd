#include "ncpart/structures.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "ncpart/error.hpp"

namespace ncpart {

namespace {

void canonicalize(std::vector<Block>& blocks) {
  for (auto& b : blocks) std::sort(b.begin(), b.end());
  std::sort(blocks.begin(), blocks.end(),
            [](const Block& a, const Block& b) { return a.front() < b.front(); });
}

// Returns owner[x] = block index for x in 1..n; validates set-partition shape.
std::vector<int> block_owners(int n, std::span<const Block> blocks) {
  if (n < 0) throw ValidationError("partition size must be nonnegative");
  std::vector<int> owner(static_cast<std::size_t>(n) + 1, -1);
  int seen = 0;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty()) throw ValidationError("partition has an empty block");
    for (Label x : blocks[b]) {
      if (x < 1 || x > n)
        throw ValidationError("label " + std::to_string(x) + " outside 1.." + std::to_string(n));
      auto& slot = owner[static_cast<std::size_t>(x)];
      if (slot != -1) throw ValidationError("label " + std::to_string(x) + " appears twice");
      slot = static_cast<int>(b);
      ++seen;
    }
  }
  if (seen != n) throw ValidationError("partition does not cover 1.." + std::to_string(n));
  return owner;
}

int parse_int(std::string_view text, std::size_t& pos) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
  if (ec != std::errc{}) throw ValidationError("expected integer at offset " + std::to_string(pos));
  pos = static_cast<std::size_t>(ptr - text.data());
  return value;
}

void expect(std::string_view text, std::size_t& pos, char c) {
  if (pos >= text.size() || text[pos] != c)
    throw ValidationError(std::string("expected '") + c + "' at offset " + std::to_string(pos));
  ++pos;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

bool is_noncrossing(int n, std::span<const Block> blocks) {
  const auto owner = block_owners(n, blocks);
  std::vector<Label> last(blocks.size());
  for (std::size_t b = 0; b < blocks.size(); ++b)
    last[b] = *std::max_element(blocks[b].begin(), blocks[b].end());

  std::vector<char> started(blocks.size(), 0);
  std::vector<int> open;
  for (Label x = 1; x <= n; ++x) {
    const int b = owner[static_cast<std::size_t>(x)];
    if (!started[static_cast<std::size_t>(b)]) {
      started[static_cast<std::size_t>(b)] = 1;
      if (last[static_cast<std::size_t>(b)] != x) open.push_back(b);
    } else {
      // A block may only be resumed when everything opened after it closed.
      if (open.empty() || open.back() != b) return false;
      if (last[static_cast<std::size_t>(b)] == x) open.pop_back();
    }
  }
  return true;
}

NCPartition NCPartition::from_blocks(int n, std::vector<Block> blocks) {
  if (!is_noncrossing(n, blocks)) throw ValidationError("partition has a crossing");
  canonicalize(blocks);
  return NCPartition(n, std::move(blocks));
}

NCPartition make_nc_partition_unchecked(int n, std::vector<Block> blocks) {
  canonicalize(blocks);
  return NCPartition(n, std::move(blocks));
}

NCPartition NCPartition::parse(std::string_view text) {
  text = trim(text);
  std::vector<Block> blocks;
  int count = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (!blocks.empty()) expect(text, pos, '|');
    expect(text, pos, '{');
    Block block;
    block.push_back(parse_int(text, pos));
    while (pos < text.size() && text[pos] == ',') {
      ++pos;
      block.push_back(parse_int(text, pos));
    }
    expect(text, pos, '}');
    count += static_cast<int>(block.size());
    blocks.push_back(std::move(block));
  }
  return from_blocks(count, std::move(blocks));
}

std::string NCPartition::to_string() const {
  std::string out;
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    if (b) out += '|';
    out += '{';
    for (std::size_t i = 0; i < blocks_[b].size(); ++i) {
      if (i) out += ',';
      out += std::to_string(blocks_[b][i]);
    }
    out += '}';
  }
  return out;
}

DyckPath DyckPath::from_steps(std::vector<Step> steps) {
  long height = 0;
  for (Step s : steps) {
    if (s != Step::Up && s != Step::Down) throw ValidationError("step must be +1 or -1");
    height += static_cast<int>(s);
    if (height < 0) throw ValidationError("Dyck path goes below zero");
  }
  if (height != 0) throw ValidationError("Dyck path does not return to zero");
  return DyckPath(std::move(steps));
}

DyckPath make_dyck_path_unchecked(std::vector<Step> steps) { return DyckPath(std::move(steps)); }

DyckPath DyckPath::parse(std::string_view text) {
  text = trim(text);
  std::vector<Step> steps;
  steps.reserve(text.size());
  for (char c : text) {
    if (c == 'U' || c == 'u')
      steps.push_back(Step::Up);
    else if (c == 'D' || c == 'd')
      steps.push_back(Step::Down);
    else
      throw ValidationError(std::string("unexpected character '") + c + "' in Dyck word");
  }
  return from_steps(std::move(steps));
}

std::string DyckPath::to_string() const {
  std::string out;
  out.reserve(steps_.size());
  for (Step s : steps_) out += (s == Step::Up ? 'U' : 'D');
  return out;
}

PlanarTree PlanarTree::from_children(std::vector<std::vector<int>> children) {
  if (children.empty()) throw ValidationError("tree needs a root");
  const auto count = children.size();
  std::vector<int> parent(count, -2);
  parent[0] = -1;
  for (std::size_t v = 0; v < count; ++v) {
    for (int c : children[v]) {
      if (c <= 0 || static_cast<std::size_t>(c) >= count)
        throw ValidationError("child index out of range or points at the root");
      if (parent[static_cast<std::size_t>(c)] != -2)
        throw ValidationError("vertex " + std::to_string(c) + " has two parents");
      parent[static_cast<std::size_t>(c)] = static_cast<int>(v);
    }
  }
  // Every vertex has exactly one parent, so reachability from the root rules
  // out cycles.
  std::vector<int> stack{0};
  std::size_t reached = 0;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    ++reached;
    for (int c : children[static_cast<std::size_t>(v)]) stack.push_back(c);
    if (reached > count) break;
  }
  if (reached != count) throw ValidationError("tree is not connected to the root");
  PlanarTree tree;
  tree.children_ = std::move(children);
  tree.parent_ = std::move(parent);
  return tree;
}

std::size_t PlanarTree::leaf_count() const {
  // The lone root of the one-vertex tree is not counted as a leaf.
  if (children_.size() == 1) return 0;
  return static_cast<std::size_t>(
      std::count_if(children_.begin() + 1, children_.end(), [](const auto& c) { return c.empty(); }));
}

BinaryTree BinaryTree::from_nodes(std::vector<Node> nodes) {
  if (nodes.empty()) throw ValidationError("tree needs a root");
  const auto count = nodes.size();
  std::vector<int> parent(count, -2);
  parent[0] = -1;
  for (std::size_t v = 0; v < count; ++v) {
    const Node& node = nodes[v];
    if ((node.left < 0) != (node.right < 0))
      throw ValidationError("binary tree vertex " + std::to_string(v) + " has exactly one child");
    for (int c : {node.left, node.right}) {
      if (c < 0) continue;
      if (c == 0 || static_cast<std::size_t>(c) >= count)
        throw ValidationError("child index out of range or points at the root");
      if (parent[static_cast<std::size_t>(c)] != -2)
        throw ValidationError("vertex " + std::to_string(c) + " has two parents");
      parent[static_cast<std::size_t>(c)] = static_cast<int>(v);
    }
  }
  if (std::find(parent.begin(), parent.end(), -2) != parent.end())
    throw ValidationError("binary tree is not connected to the root");
  BinaryTree tree;
  tree.nodes_ = std::move(nodes);
  tree.parent_ = std::move(parent);
  return tree;
}

NCPairing NCPairing::from_pairs(int m, std::vector<Pair> pairs) {
  if (m < 0 || m % 2 != 0) throw ValidationError("pairing ground set must have even size");
  std::vector<Block> blocks;
  blocks.reserve(pairs.size());
  for (auto& p : pairs) {
    if (p.first > p.second) std::swap(p.first, p.second);
    if (p.first == p.second) throw ValidationError("pair joins a point to itself");
    blocks.push_back({p.first, p.second});
  }
  if (!is_noncrossing(m, blocks)) throw ValidationError("pairing has a crossing");
  std::sort(pairs.begin(), pairs.end());
  NCPairing out;
  out.m_ = m;
  out.pairs_ = std::move(pairs);
  return out;
}

NCPairing NCPairing::parse(std::string_view text) {
  text = trim(text);
  std::vector<Pair> pairs;
  std::size_t pos = 0;
  while (pos < text.size()) {
    expect(text, pos, '(');
    Pair p{};
    p.first = parse_int(text, pos);
    expect(text, pos, ',');
    p.second = parse_int(text, pos);
    expect(text, pos, ')');
    pairs.push_back(p);
  }
  const auto m = static_cast<int>(2 * pairs.size());
  return from_pairs(m, std::move(pairs));
}

std::string NCPairing::to_string() const {
  std::ostringstream out;
  for (const auto& p : pairs_) out << '(' << p.first << ',' << p.second << ')';
  return out.str();
}

namespace {

void check_enumeration_guard(int n) {
  if (n < 0 || n > kEnumerationLimit)
    throw GuardError("exhaustive enumeration is limited to 0 <= n <= " +
                     std::to_string(kEnumerationLimit) + " (got n = " + std::to_string(n) + ")");
}

// Pending intervals of labels still to be partitioned; each is filled with an
// NC partition whose first block contains the interval's lowest label.
struct RecursiveNC {
  int n;
  const std::function<void(const NCPartition&)>& visit;
  std::vector<Block> blocks;
  std::vector<std::pair<int, int>> pending;

  void run() {
    if (pending.empty()) {
      visit(make_nc_partition_unchecked(n, blocks));
      return;
    }
    const auto [lo, hi] = pending.back();
    pending.pop_back();
    if (lo > hi) {
      run();
      pending.emplace_back(lo, hi);
      return;
    }
    const int span = hi - lo;
    for (std::uint32_t mask = 0; mask < (1u << span); ++mask) {
      Block block{lo};
      for (int i = 0; i < span; ++i)
        if (mask & (1u << i)) block.push_back(lo + 1 + i);
      const auto saved = pending.size();
      // Gaps are pushed in reverse so the leftmost one is expanded first.
      pending.emplace_back(block.back() + 1, hi);
      for (std::size_t i = block.size() - 1; i > 0; --i)
        pending.emplace_back(block[i - 1] + 1, block[i] - 1);
      blocks.push_back(std::move(block));
      run();
      blocks.pop_back();
      pending.resize(saved);
    }
    pending.emplace_back(lo, hi);
  }
};

}  // namespace

namespace detail {

void enumerate_nc_filtered(int n, const std::function<void(const NCPartition&)>& visit) {
  check_enumeration_guard(n);
  if (n == 0) {
    visit(NCPartition{});
    return;
  }
  // Restricted growth strings: rgs[0] = 0, rgs[i] <= max(rgs[0..i-1]) + 1.
  std::vector<int> rgs(static_cast<std::size_t>(n), 0);
  std::vector<int> prefix_max(static_cast<std::size_t>(n), 0);
  while (true) {
    const int block_count = prefix_max.back() + 1;
    std::vector<Block> blocks(static_cast<std::size_t>(block_count));
    for (int i = 0; i < n; ++i) blocks[static_cast<std::size_t>(rgs[static_cast<std::size_t>(i)])].push_back(i + 1);
    if (is_noncrossing(n, blocks)) visit(make_nc_partition_unchecked(n, std::move(blocks)));

    int i = n - 1;
    while (i > 0 && rgs[static_cast<std::size_t>(i)] > prefix_max[static_cast<std::size_t>(i - 1)]) --i;
    if (i == 0) break;
    ++rgs[static_cast<std::size_t>(i)];
    prefix_max[static_cast<std::size_t>(i)] =
        std::max(prefix_max[static_cast<std::size_t>(i - 1)], rgs[static_cast<std::size_t>(i)]);
    for (int j = i + 1; j < n; ++j) {
      rgs[static_cast<std::size_t>(j)] = 0;
      prefix_max[static_cast<std::size_t>(j)] = prefix_max[static_cast<std::size_t>(j - 1)];
    }
  }
}

void enumerate_nc_recursive(int n, const std::function<void(const NCPartition&)>& visit) {
  check_enumeration_guard(n);
  RecursiveNC state{n, visit, {}, {{1, n}}};
  state.run();
}

}  // namespace detail

void for_each_nc_partition(int n, const std::function<void(const NCPartition&)>& visit) {
  if (n <= 8)
    detail::enumerate_nc_filtered(n, visit);
  else
    detail::enumerate_nc_recursive(n, visit);
}

std::vector<NCPartition> enumerate_nc(int n) {
  std::vector<NCPartition> out;
  for_each_nc_partition(n, [&](const NCPartition& p) { out.push_back(p); });
  return out;
}

void for_each_dyck_path(int n, const std::function<void(const DyckPath&)>& visit) {
  check_enumeration_guard(n);
  std::vector<Step> steps;
  steps.reserve(static_cast<std::size_t>(2 * n));
  auto rec = [&](auto& self, int ups, int downs) -> void {
    if (ups == n && downs == n) {
      visit(make_dyck_path_unchecked(steps));
      return;
    }
    if (ups < n) {
      steps.push_back(Step::Up);
      self(self, ups + 1, downs);
      steps.pop_back();
    }
    if (downs < ups) {
      steps.push_back(Step::Down);
      self(self, ups, downs + 1);
      steps.pop_back();
    }
  };
  rec(rec, 0, 0);
}

std::vector<DyckPath> enumerate_dyck(int n) {
  std::vector<DyckPath> out;
  for_each_dyck_path(n, [&](const DyckPath& p) { out.push_back(p); });
  return out;
}

}  // namespace ncpart
