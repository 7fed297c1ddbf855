#pragma once

#include <string>
#include <utility>

#include "bell/graph.hpp"

namespace bell {

enum class TreeShape { STAR, DOUBLE_BROOM, GENERIC };

struct TreeClass {
  TreeShape shape;
  int n = 0;  // order of the tree the input claims to come from
};

/// Trichotomy on the degree sequence d_1 >= d_2 >= ... >= d_min of a claimed
/// 3-budget Bell graph of a tree: regular means star, d_1 = d_2 > d_min means
/// double broom, d_1 > d_2 means generic. The tree order n is read off the
/// vertex count 2^(n-2).
TreeClass classify_tree_type(const Graph& b);  // throws NotPowerOfTwoOrder

/// Inverts the double-broom edge-count formula
/// (2(a+b)+1)*2^(a+b-1) + 2^a + 2^b - 1 for a >= b >= 1, a + b = n - 3.
std::pair<int, int> solve_double_broom(long long edge_count, int n);

/// The tree on the neighbors of z, read off the hub neighborhood: two
/// neighbors are tree-adjacent exactly when they have no common neighbor
/// other than z. Result vertex i is the i-th neighbor of z in ascending id
/// order; validated to be a tree.
Graph generic_adjacency(const Graph& b, int z);  // throws NotATreeResult

struct TreeReconstruction {
  Graph tree;
  int n = 0;
  std::string method;  // "star", "double_broom", "generic" or "brute_force"
  int a = -1, b = -1;  // double_broom only
  int z = -1;          // generic only: input vertex id of the hub
};

/// Recovers the tree T with B_3(T) isomorphic to the input. Inputs of order
/// up to 8 (tree order up to 5) are matched against all trees of that order;
/// larger inputs dispatch on classify_tree_type. With verify set, the result
/// tree's Bell graph is rebuilt and checked isomorphic to the input.
TreeReconstruction reconstruct_tree(const Graph& b, bool verify = false);

}  // namespace bell
