#pragma once

#include <vector>

#include "bell/graph.hpp"

namespace bell {

// All 2^(n(n-1)/2) labeled graphs on n vertices. Guarded to n <= 6.
std::vector<Graph> all_labeled_graphs(int n);

// One representative per isomorphism class of graphs on exactly n vertices.
// Guarded to n <= 6 (1, 2, 4, 11, 34, 156 classes).
std::vector<Graph> graph_isomorphism_classes(int n);

// Representatives of triangle-free isomorphism classes on exactly n
// vertices. Guarded to n <= 7 (1, 2, 3, 7, 14, 38, 107 classes).
std::vector<Graph> triangle_free_classes(int n);

// One representative per isomorphism class of trees on n vertices
// (1, 1, 1, 2, 3, 6, 11, 23, 47 for n = 1..9).
std::vector<Graph> free_trees(int n);

}  // namespace bell
