#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "bell/canonical.hpp"
#include "bell/enumerate.hpp"
#include "bell/graph.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace bell;
using testutil::brute_isomorphic;
using testutil::edge_set;
using testutil::encode_graph6;

TEST_CASE("graph basics: order, degrees, adjacency, normalization") {
  Graph g(4, {{2, 0}, {0, 1}, {1, 2}, {0, 1}});  // duplicates and reversals
  CHECK(g.order() == 4);
  CHECK(g.edge_count() == 3);
  CHECK(g.adjacent(0, 2));
  CHECK(g.adjacent(2, 0));
  CHECK_FALSE(g.adjacent(0, 3));
  CHECK(g.degree(0) == 2);
  CHECK(g.degree(3) == 0);
  CHECK(g.neighbors(1) == std::vector<int>{0, 2});
  CHECK(g.degree_sequence() == std::vector<int>{2, 2, 2, 0});
  CHECK_THROWS_AS(Graph(2, {{0, 2}}), IndexOutOfRange);
  CHECK_THROWS_AS(Graph(2, {{1, 1}}), std::invalid_argument);  // loop
}

TEST_CASE("graph6 fixtures decoded by hand") {
  // 'B' = 2+63 is order 3; K_3 has bits 111000 -> 'w'.
  CHECK(parse_graph6("Bw") == complete_graph(3));
  CHECK(write_graph6(complete_graph(3)) == "Bw");
  CHECK(parse_graph6("B?") == empty_graph(3));
  // P_4 on ids 0-1-2-3: column-major upper triangle bits 101001 -> 'h'.
  CHECK(parse_graph6("Ch") == path_graph(4));
  // C_5: bits 101001 100100 -> "Dhc".
  CHECK(parse_graph6("Dhc") == cycle_graph(5));
  CHECK(write_graph6(cycle_graph(5)) == "Dhc");
  CHECK(parse_graph6(">>graph6<<Bw") == complete_graph(3));
  CHECK(parse_graph6(" Bw\n") == complete_graph(3));
  CHECK_THROWS_AS(parse_graph6(""), MalformedGraph6);
  CHECK_THROWS_AS(parse_graph6("B"), MalformedGraph6);      // truncated
  CHECK_THROWS_AS(parse_graph6("B\x01"), MalformedGraph6);  // byte below 63
}

TEST_CASE("graph6 round trip against an independent encoder") {
  // All labeled graphs on 4 vertices, plus a larger irregular one.
  for (int mask = 0; mask < 64; ++mask) {
    EdgeList es;
    int bit = 0;
    for (int u = 0; u < 4; ++u)
      for (int v = u + 1; v < 4; ++v, ++bit)
        if (mask & (1 << bit)) es.emplace_back(u, v);
    Graph g(4, es);
    CHECK(write_graph6(g) == encode_graph6(g));
    CHECK(parse_graph6(encode_graph6(g)) == g);
  }
  Graph big = disjoint_union(ear_graph(8), double_broom(3, 2));
  CHECK(parse_graph6(write_graph6(big)) == big);
  CHECK(write_graph6(big) == encode_graph6(big));
}

TEST_CASE("complement, union, identify") {
  Graph p4 = path_graph(4);
  CHECK(complement(complement(p4)) == p4);
  CHECK(complement(complete_graph(5)) == empty_graph(5));
  CHECK(edge_set(complement(p4)) ==
        std::set<std::pair<int, int>>{{0, 2}, {0, 3}, {1, 3}});

  Graph u = disjoint_union(complete_graph(3), path_graph(2));
  CHECK(u.order() == 5);
  CHECK(u.edge_count() == 4);
  CHECK(u.adjacent(3, 4));
  CHECK_FALSE(u.adjacent(2, 3));

  // Two triangles glued at one vertex make the bowtie.
  Graph bowtie = identify_vertices(complete_graph(3), 0, complete_graph(3), 0);
  CHECK(bowtie.order() == 5);
  CHECK(bowtie.edge_count() == 6);
  std::vector<int> ds = bowtie.degree_sequence();
  CHECK(ds == std::vector<int>{4, 2, 2, 2, 2});
}

TEST_CASE("subdivision ids follow sorted edge order") {
  Graph p3 = path_graph(3);  // edges (0,1), (1,2)
  Graph s = subdivide_each_edge(p3);
  CHECK(s.order() == 5);
  CHECK(edge_set(s) ==
        std::set<std::pair<int, int>>{{0, 3}, {1, 3}, {1, 4}, {2, 4}});
  CHECK(brute_isomorphic(subdivide_each_edge(complete_graph(3)),
                         cycle_graph(6)));
}

TEST_CASE("line graphs of the standard small graphs") {
  CHECK(brute_isomorphic(line_graph(path_graph(4)), path_graph(3)));
  CHECK(brute_isomorphic(line_graph(star_graph(3)), complete_graph(3)));
  CHECK(brute_isomorphic(line_graph(cycle_graph(5)), cycle_graph(5)));
  CHECK(line_graph(empty_graph(3)).order() == 0);
}

TEST_CASE("predicates") {
  CHECK(is_connected(path_graph(5)));
  CHECK_FALSE(is_connected(disjoint_union(path_graph(2), path_graph(2))));
  CHECK(is_connected(Graph(1)));
  CHECK(is_tree(double_broom(3, 2)));
  CHECK_FALSE(is_tree(cycle_graph(4)));
  CHECK_FALSE(is_tree(disjoint_union(path_graph(2), path_graph(1))));
  CHECK(is_triangle_free(cycle_graph(5)));
  CHECK(is_triangle_free(star_graph(4)));
  CHECK_FALSE(is_triangle_free(complete_graph(3)));
}

TEST_CASE("families have the documented shapes") {
  CHECK(star_graph(3).degree(0) == 3);
  CHECK(star_graph(0).order() == 1);
  CHECK(edge_set(double_broom(1, 1)) ==
        std::set<std::pair<int, int>>{{0, 1}, {1, 2}, {0, 3}, {2, 4}});
  CHECK(brute_isomorphic(double_broom(1, 1), path_graph(5)));
  Graph db = double_broom(2, 1);  // u=0, v=1, w=2; leaves 3,4 at u; 5 at w
  CHECK(edge_set(db) == std::set<std::pair<int, int>>{
                            {0, 1}, {1, 2}, {0, 3}, {0, 4}, {2, 5}});
  Graph ear = ear_graph(4);  // u=0, w=1, path 2-3-4, ears to 2 and 4
  CHECK(edge_set(ear) == std::set<std::pair<int, int>>{
                             {2, 3}, {3, 4}, {0, 2}, {1, 2}, {0, 4}, {1, 4}});
  CHECK(is_triangle_free(ear_graph(8)));
  CHECK_THROWS_AS(ear_graph(3), BadFamilyParams);   // odd
  CHECK_THROWS_AS(ear_graph(2), BadFamilyParams);   // too small
  CHECK_THROWS_AS(double_broom(1, 2), BadFamilyParams);  // a < b
  CHECK_THROWS_AS(cycle_graph(2), BadFamilyParams);
  CHECK(make_family("cycle", {6}) == cycle_graph(6));
  CHECK(make_family("ear", {4}) == ear_graph(4));
  CHECK_THROWS_AS(make_family("nonsense", {1}), BadFamilyParams);
}

TEST_CASE("permuted, induced, without_vertex") {
  Graph p4 = path_graph(4);
  Graph r = p4.permuted({3, 2, 1, 0});
  CHECK(r == p4);  // reversing a path relabels it onto itself
  Graph c5 = cycle_graph(5);
  CHECK(c5.induced({0, 1, 2}) == path_graph(3));
  CHECK(c5.induced({1, 0, 2}).adjacent(0, 1));  // keep order defines new ids
  CHECK(c5.without_vertex(0) == path_graph(4));
}

TEST_CASE("multigraph bookkeeping") {
  Multigraph m(3, {{0, 1, 2}, {1, 2, 1}});
  CHECK(m.order() == 3);
  CHECK(m.multiplicity(1, 0) == 2);
  CHECK(m.multiplicity(0, 2) == 0);
  CHECK(m.distinct_neighbors(1) == std::vector<int>{0, 2});
  CHECK(m.distinct_degree(1) == 2);
  CHECK(m.underlying_simple() == path_graph(3));
  CHECK_THROWS_AS(Multigraph(3, {{0, 1, 0}}), std::invalid_argument);
}

TEST_CASE("canonical forms agree with brute-force isomorphism on order 4") {
  std::vector<Graph> graphs;
  for (int mask = 0; mask < 64; ++mask) {
    EdgeList es;
    int bit = 0;
    for (int u = 0; u < 4; ++u)
      for (int v = u + 1; v < 4; ++v, ++bit)
        if (mask & (1 << bit)) es.emplace_back(u, v);
    graphs.emplace_back(4, es);
  }
  for (std::size_t i = 0; i < graphs.size(); i += 7)
    for (std::size_t j = 0; j < graphs.size(); ++j)
      CHECK(is_isomorphic(graphs[i], graphs[j]) ==
            brute_isomorphic(graphs[i], graphs[j]));
}

TEST_CASE("multigraph isomorphism distinguishes multiplicities") {
  Multigraph a(2, {{0, 1, 2}});
  Multigraph b(2, {{0, 1, 1}});
  CHECK_FALSE(is_multigraph_isomorphic(a, b));
  Multigraph c(3, {{0, 1, 2}, {1, 2, 1}});
  Multigraph d(3, {{1, 2, 2}, {0, 1, 1}});
  CHECK(is_multigraph_isomorphic(c, d));
  CHECK(testutil::brute_multigraph_isomorphic(c, d));
}

TEST_CASE("enumeration counts match the literature") {
  CHECK(graph_isomorphism_classes(4).size() == 11);
  CHECK(graph_isomorphism_classes(5).size() == 34);
  CHECK(triangle_free_classes(5).size() == 14);
  CHECK(triangle_free_classes(6).size() == 38);
  CHECK(triangle_free_classes(7).size() == 107);
  CHECK(free_trees(7).size() == 11);
  CHECK(free_trees(9).size() == 47);
  for (const Graph& t : free_trees(6)) CHECK(is_tree(t));
  for (const Graph& g : triangle_free_classes(6)) CHECK(is_triangle_free(g));
}
