#pragma once

#include <array>
#include <optional>
#include <vector>

#include "bell/graph.hpp"

namespace bell {

/// Vertex ids of bm all of whose incident edges have multiplicity 2.
/// Isolated vertices qualify vacuously. Ascending.
std::vector<int> totally_doubled(const Multigraph& bm);

/// The totally doubled vertex with the most distinct neighbors, lowest id on
/// ties. In a genuine Bell multigraph this vertex plays the role of the
/// all-singletons partition up to an automorphism.
int select_singleton_candidate(const Multigraph& bm);

/// Induced simple graph on the distinct neighbors of q. ids[i] is the bm
/// vertex behind graph vertex i. For a genuine Bell multigraph with q chosen
/// by select_singleton_candidate this is the line graph of the base graph's
/// complement.
struct NeighborhoodGraph {
  Graph graph;
  std::vector<int> ids;
};

NeighborhoodGraph neighborhood_line_graph(const Multigraph& bm, int q);

enum class TriangleRoot { K3, K13 };

struct RootRecovery {
  std::vector<int> component_ids;  // vertex ids within the searched graph
  Graph component;
  Graph root;  // line_graph(root) is isomorphic to component
  bool ambiguous = false;  // triangle component: root K_3 or K_{1,3}
  std::optional<TriangleRoot> resolved;  // filled by the full pipeline
};

/// Recovers, per connected component of l, a graph whose line graph is that
/// component, by backtracking over edge partitions into cliques with every
/// vertex in at most two cliques. Single vertices root to K_2. Triangle
/// components are flagged ambiguous and rooted at K_3 pending context.
std::vector<RootRecovery> root_graph(const Graph& l);  // throws NotALineGraph

/// Settles a triangle component: K3 exactly when the three Bell vertices
/// share a common neighbor other than q.
TriangleRoot disambiguate_triangle(const Multigraph& bm, int q,
                                   const std::array<int, 3>& triangle);

struct CoreReconstruction {
  int q = -1;
  NeighborhoodGraph neighborhood;
  std::vector<RootRecovery> recoveries;
  Graph core;
};

/// Full pipeline: totally doubled set, singleton candidate, neighborhood
/// line graph, per-component root recovery with triangle disambiguation,
/// then the complement of the union of roots. forced_candidate overrides the
/// candidate choice (it must be totally doubled); -1 selects automatically.
CoreReconstruction reconstruct_core_trace(const Multigraph& bm,
                                          int forced_candidate = -1);

/// The reconstructed core alone. Throws NotABellMultigraph when a pipeline
/// stage rejects the input.
Graph reconstruct_core(const Multigraph& bm);

/// g minus its universal vertices.
Graph core(const Graph& g);

}  // namespace bell
