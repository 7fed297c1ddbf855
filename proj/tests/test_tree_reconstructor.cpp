#include <vector>

#include "bell/bell_graph.hpp"
#include "bell/canonical.hpp"
#include "bell/enumerate.hpp"
#include "bell/graph.hpp"
#include "bell/tree_reconstruct.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace bell;
using testutil::brute_isomorphic;

namespace {

Graph bell3(const Graph& t) { return build_bell(t, 3).to_simple(); }

}  // namespace

TEST_CASE("order of a tree's Bell graph pins down the tree order") {
  for (int n = 2; n <= 7; ++n)
    for (const Graph& t : free_trees(n))
      CHECK(bell3(t).order() == (1 << (n - 2)));
  CHECK_THROWS_AS(classify_tree_type(complete_graph(3)), NotPowerOfTwoOrder);
  CHECK_THROWS_AS(classify_tree_type(Graph(0)), NotPowerOfTwoOrder);
}

TEST_CASE("degree trichotomy separates stars, brooms, and the rest") {
  TreeClass star = classify_tree_type(bell3(star_graph(5)));
  CHECK(star.shape == TreeShape::STAR);
  CHECK(star.n == 6);

  TreeClass broom = classify_tree_type(bell3(double_broom(2, 2)));
  CHECK(broom.shape == TreeShape::DOUBLE_BROOM);
  CHECK(broom.n == 7);

  TreeClass generic = classify_tree_type(bell3(path_graph(7)));
  CHECK(generic.shape == TreeShape::GENERIC);
  CHECK(generic.n == 7);
}

TEST_CASE("double broom edge counts invert to the leaf counts") {
  // order 7 brooms: (2,2) has 79 Bell edges, (3,1) has 81
  CHECK(bell3(double_broom(2, 2)).edge_count() == 79);
  CHECK(bell3(double_broom(3, 1)).edge_count() == 81);
  CHECK(solve_double_broom(79, 7) == std::pair<int, int>{2, 2});
  CHECK(solve_double_broom(81, 7) == std::pair<int, int>{3, 1});
  CHECK_THROWS_AS(solve_double_broom(80, 7), NoBroomSolution);
}

TEST_CASE("generic reconstruction recovers a spider") {
  // center 0 with legs 0-1-2, 0-3-4, 0-5: not a star, not a double broom
  Graph spider(6, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}});
  TreeReconstruction r = reconstruct_tree(bell3(spider));
  CHECK(r.method == "generic");
  CHECK(r.n == 6);
  CHECK(r.z >= 0);
  CHECK(is_tree(r.tree));
  CHECK(brute_isomorphic(r.tree, spider));
}

TEST_CASE("small orders fall back to exhaustive search") {
  TreeReconstruction r = reconstruct_tree(bell3(path_graph(4)));
  CHECK(r.method == "brute_force");
  CHECK(r.n == 4);
  CHECK(brute_isomorphic(r.tree, path_graph(4)));
  // K_4 is the Bell graph of the three-leaf star
  TreeReconstruction star = reconstruct_tree(complete_graph(4));
  CHECK(brute_isomorphic(star.tree, star_graph(3)));
}

TEST_CASE("named methods carry their parameters") {
  TreeReconstruction star = reconstruct_tree(bell3(star_graph(5)));
  CHECK(star.method == "star");
  CHECK(brute_isomorphic(star.tree, star_graph(5)));

  TreeReconstruction broom = reconstruct_tree(bell3(double_broom(3, 1)));
  CHECK(broom.method == "double_broom");
  CHECK(broom.a == 3);
  CHECK(broom.b == 1);
  CHECK(brute_isomorphic(broom.tree, double_broom(3, 1)));
}

TEST_CASE("round trips across all trees of order up to eight") {
  for (int n = 2; n <= 8; ++n)
    for (const Graph& t : free_trees(n)) {
      TreeReconstruction r = reconstruct_tree(bell3(t), true);
      CHECK(is_isomorphic(r.tree, t));
    }
  // a path long enough to take the generic branch
  CHECK(is_isomorphic(reconstruct_tree(bell3(path_graph(7))).tree,
                      path_graph(7)));
}

TEST_CASE("non-Bell inputs are rejected") {
  CHECK_THROWS_AS(reconstruct_tree(path_graph(3)), NotPowerOfTwoOrder);
  // order 8 = 2^3 wants a tree of order 5, but no such Bell graph is empty
  CHECK_THROWS_AS(reconstruct_tree(empty_graph(8)), NotABellTreeGraph);
  // C_16 passes the power-of-two gate but fails the degree trichotomy
  CHECK_THROWS(reconstruct_tree(cycle_graph(16)));
}
