#include <algorithm>
#include <string>
#include <vector>

#include "bell/graph.hpp"
#include "bell/partition.hpp"
#include "doctest.h"

using namespace bell;

namespace {

StablePartition sp(const std::string& text, int budget) {
  return StablePartition::from_string(text, budget);
}

}  // namespace

TEST_CASE("partition construction and canonical order") {
  StablePartition p(3, {{2, 1}, {0}});
  CHECK(p.budget() == 3);
  CHECK(p.nonempty_count() == 2);
  CHECK(p.empty_count() == 1);
  CHECK(p.ground_size() == 3);
  CHECK(p.part_containing(2) == p.part_containing(1));
  CHECK(p.has_singleton(0));
  CHECK_FALSE(p.has_singleton(1));
  CHECK(p.has_part({1, 2}));
  CHECK_FALSE(p.has_part({0, 1}));
  // singletons first (smaller parts), then by content
  CHECK(p.to_string() == "0|1,2");
  CHECK(sp("1,2|0", 3) == p);
  CHECK(sp("0|1,2", 3) == p);

  CHECK_THROWS_AS(StablePartition(1, {{0}, {1}}), std::invalid_argument);
  CHECK_THROWS_AS(StablePartition(3, {{0}, {0, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(StablePartition(3, {{0}, {2}}), std::invalid_argument);
}

TEST_CASE("to_string and from_string round trip") {
  StablePartition p(4, {{10, 3}, {2}, {4}, {0, 1, 5, 6, 7, 8, 9}});
  // ground is 0..10 so every id must appear
  CHECK(sp(p.to_string(), 4) == p);
  StablePartition empty(2, {});
  CHECK(empty.to_string() == "");
  CHECK(sp("", 2) == empty);
  CHECK_THROWS(sp("0|0", 2));
  CHECK_THROWS(sp("0|2", 2));  // gap: 1 missing
}

TEST_CASE("stable partitions of the empty graph count Stirling sums") {
  // Partitions of an m-set into at most k parts.
  CHECK(enumerate_stable_partitions(empty_graph(3), 3).size() == 5);
  CHECK(enumerate_stable_partitions(empty_graph(4), 4).size() == 15);
  CHECK(enumerate_stable_partitions(empty_graph(4), 3).size() == 14);
  CHECK(enumerate_stable_partitions(empty_graph(4), 1).size() == 1);
  CHECK(enumerate_stable_partitions(empty_graph(5), 5).size() == 52);
}

TEST_CASE("stability excludes parts containing an edge") {
  // P_3 = 0-1-2: {0,2} is the only independent pair.
  auto parts = enumerate_stable_partitions(path_graph(3), 2);
  REQUIRE(parts.size() == 1);
  CHECK(parts[0] == sp("1|0,2", 2));
  auto parts3 = enumerate_stable_partitions(path_graph(3), 3);
  CHECK(parts3.size() == 2);  // adds the all-singletons partition

  // No partition of K_3 fits in two parts.
  CHECK(enumerate_stable_partitions(complete_graph(3), 2).empty());
  CHECK(enumerate_stable_partitions(complete_graph(3), 3).size() == 1);
}

TEST_CASE("restriction deletes one vertex and keeps the budget") {
  StablePartition p = sp("0|1,2", 3);
  Restriction r = restrict(p, 1);
  CHECK(r.budget == 3);
  CHECK(r.parts == std::vector<std::vector<int>>{{0}, {2}});
  Restriction gone = restrict(sp("0", 1), 0);
  CHECK(gone.parts.empty());
  Restriction rs = restrict_set(sp("0|1|2,3", 4), {0, 2});
  CHECK(rs.parts == std::vector<std::vector<int>>{{1}, {3}});
}

TEST_CASE("witness sets on the five partitions of three isolated vertices") {
  const int k = 3;
  auto p0 = sp("0|1|2", k);
  auto p1 = sp("2|0,1", k);
  auto p2 = sp("1|0,2", k);
  auto p3 = sp("0|1,2", k);
  auto p4 = sp("0,1,2", k);
  CHECK(witnesses(p0, p1) == std::vector<int>{0, 1});
  CHECK(witnesses(p0, p2) == std::vector<int>{0, 2});
  CHECK(witnesses(p0, p3) == std::vector<int>{1, 2});
  CHECK(witnesses(p0, p4) == std::vector<int>{});  // the missing edge
  CHECK(witnesses(p1, p2) == std::vector<int>{0});
  CHECK(witnesses(p1, p3) == std::vector<int>{1});
  CHECK(witnesses(p1, p4) == std::vector<int>{2});
  CHECK(witnesses(p2, p3) == std::vector<int>{2});
  CHECK(witnesses(p2, p4) == std::vector<int>{1});
  CHECK(witnesses(p3, p4) == std::vector<int>{0});
}

TEST_CASE("legal moves from the all-singletons partition") {
  Graph g = empty_graph(3);
  auto p0 = sp("0|1|2", 3);
  auto moves = legal_moves(p0, g);
  // each vertex can join either other part; results collapse to p1..p3
  CHECK(moves.size() == 6);
  for (const Move& m : moves) {
    CHECK(m.result != p0);
    auto ws = witnesses(p0, m.result);
    CHECK(std::find(ws.begin(), ws.end(), m.witness) != ws.end());
  }
  // from the one-block partition each vertex can split off into an empty slot
  auto from_top = legal_moves(sp("0,1,2", 3), g);
  CHECK(from_top.size() == 3);
}

TEST_CASE("doubled edges are exactly the pair versus split pattern") {
  auto a = sp("2|0,1", 3);
  auto b = sp("0|1|2", 3);
  auto pat = is_double_edge_pattern(a, b);
  REQUIRE(pat.has_value());
  CHECK(pat->a == 0);
  CHECK(pat->b == 1);
  CHECK_FALSE(is_double_edge_pattern(a, sp("1|0,2", 3)).has_value());
  CHECK_FALSE(is_double_edge_pattern(a, sp("0,1,2", 3)).has_value());
  // pattern is symmetric in its arguments
  CHECK(is_double_edge_pattern(b, a).has_value());
}
