#include <algorithm>
#include <string>
#include <vector>

#include "bell/bell_graph.hpp"
#include "bell/canonical.hpp"
#include "bell/graph.hpp"
#include "bell/partition.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace bell;
using testutil::brute_isomorphic;
using testutil::brute_multigraph_isomorphic;

namespace {

int id_of(const BellGraph& b, const std::string& text) {
  return b.index_of(StablePartition::from_string(text, b.budget()));
}

std::vector<int> edge_witnesses(const BellGraph& b, int u, int v) {
  const BellEdge* e = b.find_edge(u, v);
  REQUIRE(e != nullptr);
  return e->witnesses;
}

}  // namespace

TEST_CASE("three isolated vertices, three colors: the five-partition fixture") {
  BellGraph b = build_bell(empty_graph(3), 3);
  REQUIRE(b.order() == 5);
  int p0 = id_of(b, "0|1|2");
  int p1 = id_of(b, "2|0,1");
  int p2 = id_of(b, "1|0,2");
  int p3 = id_of(b, "0|1,2");
  int p4 = id_of(b, "0,1,2");

  CHECK(b.edges().size() == 9);
  CHECK(b.find_edge(p0, p4) == nullptr);  // the missing edge of K_5 - e
  CHECK(edge_witnesses(b, p0, p1) == std::vector<int>{0, 1});
  CHECK(edge_witnesses(b, p0, p2) == std::vector<int>{0, 2});
  CHECK(edge_witnesses(b, p0, p3) == std::vector<int>{1, 2});
  CHECK(edge_witnesses(b, p1, p2) == std::vector<int>{0});
  CHECK(edge_witnesses(b, p1, p3) == std::vector<int>{1});
  CHECK(edge_witnesses(b, p1, p4) == std::vector<int>{2});
  CHECK(edge_witnesses(b, p2, p3) == std::vector<int>{2});
  CHECK(edge_witnesses(b, p2, p4) == std::vector<int>{1});
  CHECK(edge_witnesses(b, p3, p4) == std::vector<int>{0});

  // Simple projection is K_5 minus one edge.
  Graph k5e(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {1, 4},
                {2, 3}, {2, 4}, {3, 4}});
  CHECK(brute_isomorphic(b.to_simple(), k5e));

  // Multigraph degrees: 6 at the all-singletons end, 3 at the one-block end.
  Multigraph m = b.to_multigraph();
  auto mdeg = [&](int v) {
    int d = 0;
    for (const auto& e : m.edges())
      if (e[0] == v || e[1] == v) d += e[2];
    return d;
  };
  CHECK(mdeg(p0) == 6);
  CHECK(mdeg(p4) == 3);
  CHECK(mdeg(p1) == 5);
}

TEST_CASE("star with three leaves, three colors: K_4 with singleton witnesses") {
  BellGraph b = build_bell(star_graph(3), 3);
  REQUIRE(b.order() == 4);
  int top = id_of(b, "0|1,2,3");
  int a = id_of(b, "0|1|2,3");
  int c2 = id_of(b, "0|2|1,3");
  int c3 = id_of(b, "0|3|1,2");
  CHECK(edge_witnesses(b, top, a) == std::vector<int>{1});
  CHECK(edge_witnesses(b, top, c2) == std::vector<int>{2});
  CHECK(edge_witnesses(b, top, c3) == std::vector<int>{3});
  CHECK(edge_witnesses(b, a, c2) == std::vector<int>{3});
  CHECK(edge_witnesses(b, a, c3) == std::vector<int>{2});
  CHECK(edge_witnesses(b, c2, c3) == std::vector<int>{1});
  CHECK(brute_isomorphic(b.to_simple(), complete_graph(4)));
  Multigraph m = b.to_multigraph();
  for (const auto& e : m.edges()) CHECK(e[2] == 1);
}

TEST_CASE("triangle plus isolated vertex, four colors: K_4 with a tripled hub") {
  Graph g = disjoint_union(complete_graph(3), complete_graph(1));
  BellGraph b = build_bell(g, 4);
  REQUIRE(b.order() == 4);
  int hub = id_of(b, "0|1|2|3");
  CHECK(brute_isomorphic(b.to_simple(), complete_graph(4)));
  int doubled = 0;
  for (const BellEdge& e : b.edges())
    if (e.witnesses.size() == 2) {
      ++doubled;
      CHECK((e.u == hub || e.v == hub));
    }
  CHECK(doubled == 3);

  // Same simple graph as the star fixture, different multigraph (criterion
  // from the opening figures): equal simple forms, unequal multiplicities.
  BellGraph star = build_bell(star_graph(3), 3);
  CHECK(brute_isomorphic(b.to_simple(), star.to_simple()));
  CHECK_FALSE(is_multigraph_isomorphic(b.to_multigraph(),
                                       star.to_multigraph()));
  CHECK_FALSE(brute_multigraph_isomorphic(b.to_multigraph(),
                                          star.to_multigraph()));
  // ... while two colors on three isolated vertices give the same multigraph.
  BellGraph pairs = build_bell(empty_graph(3), 2);
  CHECK(is_multigraph_isomorphic(star.to_multigraph(),
                                 pairs.to_multigraph()));
  CHECK(brute_multigraph_isomorphic(star.to_multigraph(),
                                    pairs.to_multigraph()));
}

TEST_CASE("path on four vertices, three colors: C_4 with two doubled edges") {
  BellGraph b = build_bell(path_graph(4), 3);
  REQUIRE(b.order() == 4);
  CHECK(brute_isomorphic(b.to_simple(), cycle_graph(4)));
  int two_part = id_of(b, "0,2|1,3");
  int doubled = 0;
  for (const BellEdge& e : b.edges())
    if (e.witnesses.size() == 2) {
      ++doubled;
      CHECK((e.u == two_part || e.v == two_part));
    }
  CHECK(doubled == 2);
}

TEST_CASE("degenerate budgets") {
  // One color: only edgeless graphs admit a partition, and it is unique.
  BellGraph b1 = build_bell(empty_graph(4), 1);
  CHECK(b1.order() == 1);
  CHECK(b1.edges().empty());
  CHECK(build_bell(path_graph(3), 1).order() == 0);
  // k = n on the complete graph: exactly the singleton partition.
  BellGraph bn = build_bell(complete_graph(4), 4);
  CHECK(bn.order() == 1);
  CHECK_THROWS_AS(build_bell(path_graph(3), 0), std::invalid_argument);
}

TEST_CASE("vertex order and ids are stable and queryable") {
  BellGraph b = build_bell(path_graph(4), 3);
  for (int i = 0; i < b.order(); ++i)
    CHECK(b.index_of(b.vertex(i)) == i);
  CHECK(b.find_index(StablePartition::from_string("0,2|1,3", 3)) >= 0);
  StablePartition absent(3, {{0}, {1}, {2, 3}});  // 2,3 is an edge of P_4
  CHECK(b.find_index(absent) == -1);
  CHECK_THROWS_AS(b.index_of(absent), IndexOutOfRange);
  CHECK(b.base() == path_graph(4));
  CHECK(b.budget() == 3);
}

TEST_CASE("bell json round trip preserves everything") {
  BellGraph b = build_bell(star_graph(3), 3);
  nlohmann::json j = bell_to_json(b);
  CHECK(j["k"] == 3);
  CHECK(j["base"] == write_graph6(star_graph(3)));
  CHECK(j["vertices"].size() == 4);
  BellGraph back = bell_from_json(j);
  CHECK(back.order() == b.order());
  CHECK(back.budget() == b.budget());
  CHECK(back.base() == b.base());
  for (int i = 0; i < b.order(); ++i) CHECK(back.vertex(i) == b.vertex(i));
  REQUIRE(back.edges().size() == b.edges().size());
  for (std::size_t i = 0; i < b.edges().size(); ++i) {
    CHECK(back.edges()[i].u == b.edges()[i].u);
    CHECK(back.edges()[i].v == b.edges()[i].v);
    CHECK(back.edges()[i].witnesses == b.edges()[i].witnesses);
  }

  Multigraph m = b.to_multigraph();
  Multigraph m2 = multigraph_from_json(multigraph_to_json(m));
  CHECK(m2 == m);
  CHECK_THROWS_AS(multigraph_from_json(nlohmann::json::object()),
                  std::invalid_argument);
}

TEST_CASE("degree stats summarize the simple projection") {
  DegreeStats st = degree_stats(build_bell(empty_graph(3), 3));
  CHECK(st.degree_sequence == std::vector<int>{4, 4, 4, 3, 3});
  CHECK(st.edge_count == 9);
  CHECK(st.max_degree_vertices.size() == 3);
}
