#pragma once

#include <map>
#include <string>
#include <vector>

#include "json.hpp"

#include "bell/graph.hpp"
#include "bell/partition.hpp"

namespace bell {

/// One unordered edge of a Bell coloring graph together with every vertex
/// whose move realizes it (1 or 2 of them).
struct BellEdge {
  int u, v;                    // u < v
  std::vector<int> witnesses;  // sorted

  friend bool operator==(const BellEdge&, const BellEdge&) = default;
};

/// The Bell k-coloring graph of a base graph: vertices are the stable
/// k-partitions in canonical order, edges carry their witness sets.
class BellGraph {
 public:
  BellGraph(Graph base, int budget, std::vector<StablePartition> vertices,
            std::vector<BellEdge> edges);

  const Graph& base() const { return base_; }
  int budget() const { return budget_; }
  int order() const { return static_cast<int>(vertices_.size()); }
  const std::vector<StablePartition>& vertices() const { return vertices_; }
  const StablePartition& vertex(int id) const;
  const std::vector<BellEdge>& edges() const { return edges_; }

  /// Vertex id of a partition, or -1 if absent.
  int find_index(const StablePartition& p) const;
  int index_of(const StablePartition& p) const;  // throws IndexOutOfRange
  const BellEdge* find_edge(int u, int v) const;

  Graph to_simple() const;
  Multigraph to_multigraph() const;

 private:
  Graph base_;
  int budget_;
  std::vector<StablePartition> vertices_;
  std::vector<BellEdge> edges_;
  std::map<StablePartition, int> index_;
};

/// Builds B_k(g) by enumerating stable partitions and generating the legal
/// moves out of each one (forward-star generation; each edge is met from both
/// endpoints with the same witness set).
BellGraph build_bell(const Graph& g, int k);

/// The classical k-coloring reconfiguration graph: proper colorings
/// V -> {0..k-1} as vertices, edges between colorings differing at exactly
/// one vertex. Intended for small cross-checks only.
Graph build_coloring_graph(const Graph& g, int k);

struct DegreeStats {
  std::vector<int> degree_sequence;  // descending
  int edge_count = 0;
  std::vector<int> max_degree_vertices;  // ascending ids
};

DegreeStats degree_stats(const BellGraph& b);

// JSON interchange. The Bell graph schema {base, k, vertices, edges} is also
// the input format of the reconstruction commands; see docs/formats.md.
nlohmann::json bell_to_json(const BellGraph& b);
BellGraph bell_from_json(const nlohmann::json& j);
nlohmann::json multigraph_to_json(const Multigraph& m);
Multigraph multigraph_from_json(const nlohmann::json& j);

}  // namespace bell
