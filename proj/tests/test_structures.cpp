#include "doctest.h"
#include "oracles.hpp"

#include <set>

#include "ncpart/error.hpp"
#include "ncpart/structures.hpp"

using namespace ncpart;

TEST_SUITE("structures") {

TEST_CASE("is_noncrossing on the basic examples") {
  std::vector<Block> crossing{{1, 3}, {2, 4}};
  CHECK_FALSE(is_noncrossing(4, crossing));
  std::vector<Block> fig{{1, 2, 5, 6, 7, 8}, {3, 4}, {9}};
  CHECK(is_noncrossing(9, fig));
  std::vector<Block> singles{{1}, {2}, {3}};
  CHECK(is_noncrossing(3, singles));
}

TEST_CASE("is_noncrossing rejects malformed partitions") {
  std::vector<Block> missing{{1, 2}};
  CHECK_THROWS_AS(is_noncrossing(3, missing), ValidationError);
  std::vector<Block> repeated{{1, 2}, {2, 3}};
  CHECK_THROWS_AS(is_noncrossing(3, repeated), ValidationError);
  std::vector<Block> out_of_range{{1, 4}, {2, 3}};
  CHECK_THROWS_AS(is_noncrossing(3, out_of_range), ValidationError);
  std::vector<Block> empty_block{{1, 2, 3}, {}};
  CHECK_THROWS_AS(is_noncrossing(3, empty_block), ValidationError);
}

TEST_CASE("is_noncrossing agrees with the quadruple scan on every set partition") {
  for (int n = 0; n <= 8; ++n) {
    for (const auto& blocks : oracle::all_set_partitions(n)) {
      CHECK(is_noncrossing(n, blocks) == !oracle::crosses(blocks, n));
    }
  }
}

TEST_CASE("random set partitions at larger n") {
  std::mt19937_64 gen(7);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + trial % 30;
    const auto blocks = oracle::random_set_partition(n, gen);
    CHECK(is_noncrossing(n, blocks) == !oracle::crosses(blocks, n));
  }
}

TEST_CASE("NCPartition canonical text round trip") {
  const auto p = NCPartition::parse("{3,4}|{9}|{8,7,6,5,2,1}");
  CHECK(p.size() == 9);
  CHECK(p.num_blocks() == 3);
  CHECK(p.to_string() == "{1,2,5,6,7,8}|{3,4}|{9}");
  CHECK(NCPartition::parse(p.to_string()) == p);
  CHECK(NCPartition::parse("").size() == 0);
  CHECK_THROWS_AS(NCPartition::parse("{1,3}|{2,4}"), ValidationError);
  CHECK_THROWS_AS(NCPartition::parse("{1,2"), ValidationError);
  CHECK_THROWS_AS(NCPartition::parse("{1}|{3}"), ValidationError);
  CHECK_THROWS_AS(NCPartition::from_blocks(2, {{1}, {1, 2}}), ValidationError);
}

TEST_CASE("DyckPath validation") {
  CHECK(DyckPath::parse("UUDD").semilength() == 2);
  CHECK(DyckPath::parse("UUDD").to_string() == "UUDD");
  CHECK(DyckPath::parse("").semilength() == 0);
  CHECK_THROWS_AS(DyckPath::parse("DU"), ValidationError);
  CHECK_THROWS_AS(DyckPath::parse("UUD"), ValidationError);
  CHECK_THROWS_AS(DyckPath::parse("UXDD"), ValidationError);
  CHECK_THROWS_AS(DyckPath::from_steps({Step::Up, Step::Down, Step::Down, Step::Up}), ValidationError);
}

TEST_CASE("tree validation") {
  CHECK(PlanarTree::from_children({{1, 2}, {}, {}}).leaf_count() == 2);
  CHECK_THROWS_AS(PlanarTree::from_children({{1}, {0}}), ValidationError);
  CHECK_THROWS_AS(PlanarTree::from_children({{1}, {}, {}}), ValidationError);
  CHECK_THROWS_AS(PlanarTree::from_children({{1, 1}, {}}), ValidationError);
  using N = BinaryTree::Node;
  CHECK(BinaryTree::from_nodes({N{1, 2, 1}, N{}, N{}}).semilength() == 1);
  CHECK_THROWS_AS(BinaryTree::from_nodes({N{1, -1, 0}, N{}}), ValidationError);
  CHECK_THROWS_AS(BinaryTree::from_nodes({N{1, 2, 0}, N{}, N{}, N{}}), ValidationError);
}

TEST_CASE("NCPairing validation") {
  const auto p = NCPairing::parse("(1,6)(2,5)(3,4)");
  CHECK(p.size() == 6);
  CHECK(p.num_pairs() == 3);
  CHECK(p.to_string() == "(1,6)(2,5)(3,4)");
  CHECK_THROWS_AS(NCPairing::parse("(1,3)(2,4)"), ValidationError);
  CHECK_THROWS_AS(NCPairing::from_pairs(3, {{1, 2}}), ValidationError);
  CHECK_THROWS_AS(NCPairing::from_pairs(4, {{1, 2}, {2, 3}}), ValidationError);
}

TEST_CASE("enumerate_nc counts") {
  CHECK(enumerate_nc(0).size() == 1);
  CHECK(enumerate_nc(3).size() == 5);
  CHECK(enumerate_nc(4).size() == 14);
  const auto cat = oracle::catalan_table(12);
  for (int n = 0; n <= 12; ++n) {
    std::size_t count = 0;
    for_each_nc_partition(n, [&](const NCPartition&) { ++count; });
    CHECK(mpz_class(static_cast<unsigned long>(count)) == cat[static_cast<std::size_t>(n)]);
  }
  CHECK_THROWS_AS(enumerate_nc(kEnumerationLimit + 1), GuardError);
  CHECK_THROWS_AS(enumerate_nc(-1), GuardError);
}

TEST_CASE("enumerate_nc yields distinct valid partitions") {
  for (int n = 0; n <= 9; ++n) {
    std::set<std::string> seen;
    for (const auto& p : enumerate_nc(n)) {
      CHECK(p.size() == n);
      CHECK(is_noncrossing(n, p.blocks()));
      CHECK(seen.insert(p.to_string()).second);
    }
  }
}

TEST_CASE("both enumeration routes produce the same set") {
  for (int n = 0; n <= 10; ++n) {
    std::set<std::string> a;
    std::set<std::string> b;
    detail::enumerate_nc_filtered(n, [&](const NCPartition& p) { a.insert(p.to_string()); });
    detail::enumerate_nc_recursive(n, [&](const NCPartition& p) { b.insert(p.to_string()); });
    CHECK(a == b);
  }
}

TEST_CASE("enumerate_dyck matches brute force") {
  CHECK(enumerate_dyck(1).front().to_string() == "UD");
  const auto two = enumerate_dyck(2);
  REQUIRE(two.size() == 2);
  CHECK(two[0].to_string() == "UUDD");
  CHECK(two[1].to_string() == "UDUD");
  CHECK(enumerate_dyck(3).size() == 5);
  for (int n = 0; n <= 9; ++n) {
    const auto brute = oracle::all_dyck_words(n);
    const auto paths = enumerate_dyck(n);
    REQUIRE(paths.size() == brute.size());
    for (std::size_t i = 0; i < paths.size(); ++i) CHECK(paths[i].to_string() == brute[i]);
  }
}

}
