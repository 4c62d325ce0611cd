#include "doctest.h"
#include "oracles.hpp"

#include <algorithm>
#include <set>

#include "ncpart/bijections.hpp"
#include "ncpart/error.hpp"
#include "ncpart/statistics.hpp"

using namespace ncpart;

namespace {

const char* kExamplePath = "UUUUDDUUUUDDDDDDUD";
const char* kExamplePartition = "{1,2,5,6,7,8}|{3,4}|{9}";

std::vector<int> down_runs(const std::string& w) {
  std::vector<int> runs;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] != 'D') continue;
    if (i == 0 || w[i - 1] == 'U') runs.push_back(0);
    ++runs.back();
  }
  std::sort(runs.begin(), runs.end());
  return runs;
}

std::vector<int> block_sizes(const NCPartition& p) {
  std::vector<int> s;
  for (const auto& b : p.blocks()) s.push_back(static_cast<int>(b.size()));
  std::sort(s.begin(), s.end());
  return s;
}

std::vector<int> binary_return_paths(const BinaryTree& t) {
  std::vector<int> out;
  for (int v = 1; v < static_cast<int>(t.vertex_count()); ++v) {
    if (!t.is_leaf(v) || t.node(t.parent(v)).right != v) continue;
    int len = 0;
    int u = v;
    while (u != 0 && t.node(t.parent(u)).right == u) {
      ++len;
      u = t.parent(u);
    }
    out.push_back(len);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_SUITE("bijections") {

TEST_CASE("nine-point example both directions") {
  const auto path = DyckPath::parse(kExamplePath);
  CHECK(dyck_to_partition(path).to_string() == kExamplePartition);
  CHECK(partition_to_dyck(NCPartition::parse(kExamplePartition)).to_string() == kExamplePath);
  CHECK(binary_tree_blocks(dyck_to_binary_tree(path)).to_string() == kExamplePartition);
  CHECK(planar_tree_blocks(dyck_to_planar_tree(path)).to_string() == kExamplePartition);
}

TEST_CASE("dyck_to_partition small cases") {
  CHECK(dyck_to_partition(DyckPath::parse("UDUDUDUD")).to_string() == "{1}|{2}|{3}|{4}");
  CHECK(dyck_to_partition(DyckPath::parse("UUUUDDDD")).to_string() == "{1,2,3,4}");
  CHECK(partition_to_dyck(NCPartition::parse("{1}|{2}|{3}")).to_string() == "UDUDUD");
  CHECK(partition_to_dyck(NCPartition::parse("{1,2}")).to_string() == "UUDD");
}

TEST_CASE("dyck_to_partition agrees with the level-scan oracle") {
  for (int n = 0; n <= 10; ++n)
    for (const auto& w : oracle::all_dyck_words(n))
      CHECK(dyck_to_partition(DyckPath::parse(w)).blocks() == oracle::partition_of_word(w));
}

TEST_CASE("planar and binary tree examples") {
  const auto one = dyck_to_planar_tree(DyckPath::parse("UD"));
  CHECK(one.vertex_count() == 2);
  CHECK(one.children(0) == std::vector<int>{1});
  const auto two = dyck_to_planar_tree(DyckPath::parse("UDUD"));
  CHECK(two.vertex_count() == 3);
  CHECK(two.children(0).size() == 2);
  const auto bin = dyck_to_binary_tree(DyckPath::parse("UD"));
  CHECK(bin.vertex_count() == 3);
  CHECK_FALSE(bin.is_leaf(0));
  CHECK(bin.is_leaf(bin.node(0).left));
  CHECK(bin.is_leaf(bin.node(0).right));
  CHECK(binary_tree_blocks(bin).to_string() == "{1}");
}

TEST_CASE("binary_tree_blocks rejects unlabeled trees") {
  using N = BinaryTree::Node;
  const auto t = BinaryTree::from_nodes({N{1, 2, 0}, N{}, N{}});
  CHECK_THROWS_AS(binary_tree_blocks(t), ValidationError);
}

TEST_CASE("all bijection pairs are mutually inverse up to n = 10") {
  for (int n = 0; n <= 10; ++n) {
    for_each_dyck_path(n, [&](const DyckPath& path) {
      const auto part = dyck_to_partition(path);
      CHECK(partition_to_dyck(part) == path);
      const auto planar = dyck_to_planar_tree(path);
      CHECK(planar.vertex_count() == static_cast<std::size_t>(n) + 1);
      CHECK(planar_tree_to_dyck(planar) == path);
      const auto bin = dyck_to_binary_tree(path);
      CHECK(bin.vertex_count() == static_cast<std::size_t>(2 * n + 1));
      CHECK(binary_tree_to_dyck(bin) == path);
      CHECK(binary_tree_blocks(bin) == part);
      CHECK(planar_tree_blocks(planar) == part);
      const auto pairing = double_partition(part);
      CHECK(undouble(pairing) == part);
      CHECK(dyck_to_pairing(pairing_to_dyck(pairing)) == pairing);
    });
  }
}

TEST_CASE("statistic transport up to n = 10") {
  for (int n = 1; n <= 10; ++n) {
    for_each_dyck_path(n, [&](const DyckPath& path) {
      const auto part = dyck_to_partition(path);
      const auto planar = dyck_to_planar_tree(path);
      CHECK(static_cast<int>(part.num_blocks()) == dyck_peaks(path));
      CHECK(part.num_blocks() == planar.leaf_count());
      const auto sizes = block_sizes(part);
      CHECK(sizes == down_runs(path.to_string()));
      CHECK(sizes == binary_return_paths(dyck_to_binary_tree(path)));
    });
  }
}

TEST_CASE("doubling examples") {
  CHECK(double_partition(NCPartition::parse("{1}|{2}")).to_string() == "(1,2)(3,4)");
  CHECK(double_partition(NCPartition::parse("{1,3}|{2}")).to_string() == "(1,6)(2,5)(3,4)");
  CHECK(undouble(NCPairing::parse("(1,2)(3,4)")).to_string() == "{1}|{2}");
  CHECK(undouble(NCPairing::parse("(1,6)(2,5)(3,4)")).to_string() == "{1,3}|{2}");
  CHECK(undouble(NCPairing::parse("(1,4)(2,3)")).to_string() == "{1,2}");
}

TEST_CASE("doubling is a bijection onto the NC pairings") {
  for (int n = 1; n <= 9; ++n) {
    std::set<std::string> images;
    for (const auto& p : enumerate_nc(n)) {
      const auto pairing = double_partition(p);
      CHECK(pairing.size() == 2 * n);
      CHECK(pairing.num_pairs() == static_cast<std::size_t>(n));
      CHECK_NOTHROW(NCPairing::from_pairs(pairing.size(), pairing.pairs()));
      CHECK(images.insert(pairing.to_string()).second);
    }
    std::size_t pairings = 0;
    for_each_dyck_path(n, [&](const DyckPath& path) {
      const auto pairing = dyck_to_pairing(path);
      ++pairings;
      CHECK(images.count(pairing.to_string()) == 1);
      CHECK(double_partition(undouble(pairing)) == pairing);
    });
    CHECK(pairings == images.size());
  }
}

TEST_CASE("pairing to dyck examples") {
  CHECK(pairing_to_dyck(NCPairing::parse("(1,2)")).to_string() == "UD");
  CHECK(pairing_to_dyck(NCPairing::parse("(1,4)(2,3)")).to_string() == "UUDD");
}

}
