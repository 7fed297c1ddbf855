#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bell/bell_graph.hpp"

namespace bell {

enum class CliqueFamily { S_CLIQUE, CYCLIC_T, RADIAL_T, SPLIT_TETRA, FUSED_TETRA };

const char* family_name(CliqueFamily family);

struct CliqueClass {
  CliqueFamily family = CliqueFamily::S_CLIQUE;
  // S family, size >= 2: the common witness (unique once the size is >= 3).
  std::optional<int> anchor;
  // T families: the three distinct realizer vertices, ascending.
  std::vector<int> realizers;
  // RADIAL_T / SPLIT_TETRA / FUSED_TETRA: bell vertex id of the hub (the
  // radial center, the vertex outside the T-face, or the triple-part
  // partition respectively).
  std::optional<int> hub;
  // Clique edges carrying two witnesses, as bell vertex id pairs.
  std::vector<std::pair<int, int>> doubled_edges;
};

// Classification uses witness sets alone; partition structure is consulted
// only to split cyclic from radial and split from fused.
CliqueClass classify_triangle(const BellGraph& b, const std::array<int, 3>& ids);
CliqueClass classify_clique(const BellGraph& b, std::vector<int> ids);

std::vector<std::vector<int>> enumerate_maximal_cliques(const Graph& g);

struct CliqueCensus {
  int s_triangles = 0;
  int cyclic_triangles = 0;
  int radial_triangles = 0;
  int s_tetrahedra = 0;
  int split_tetrahedra = 0;
  int fused_tetrahedra = 0;
  int larger_s_cliques = 0;  // all cliques of size >= 5 classify as S
};

CliqueCensus clique_census(const BellGraph& b);
nlohmann::json census_to_json(const CliqueCensus& c);

// True iff some vertex subset of host induces a graph isomorphic to pattern.
bool contains_induced(const Graph& pattern, const Graph& host);

struct K4eScanReport {
  int max_n = 0;
  long long bell_graphs_checked = 0;
  // (graph6 of G, k) for every scanned pair whose Bell graph has 4 vertices
  std::vector<std::pair<std::string, int>> four_vertex_cases;
};

// Scans every graph of order <= max_n and every 1 <= k <= n+1, asserting that
// no B_k(G) is the diamond K_4 - e. Throws CounterexampleFound otherwise.
K4eScanReport verify_k4e_not_bell(int max_n);

}  // namespace bell
