#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "bell/errors.hpp"

namespace bell {

using Edge = std::pair<int, int>;
using EdgeList = std::vector<Edge>;

/// Finite simple graph on vertex ids 0..n-1. Edges are stored normalized
/// (u < v, sorted, no duplicates), so operator== is labeled-graph equality.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int order);
  Graph(int order, EdgeList edges);

  int order() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const EdgeList& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const;
  int degree(int v) const;
  bool adjacent(int u, int v) const;
  std::vector<int> degree_sequence() const;  // descending

  /// Relabels: vertex v becomes new_id[v] (new_id must be a permutation).
  Graph permuted(const std::vector<int>& new_id) const;
  /// Induced subgraph on the given vertices, relabeled 0..k-1 in list order.
  Graph induced(const std::vector<int>& keep) const;
  Graph without_vertex(int v) const;

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && edges_ == other.edges_;
  }

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  EdgeList edges_;
  std::vector<std::vector<int>> adj_;
};

/// Finite multigraph: unordered vertex pairs carrying a positive multiplicity.
class Multigraph {
 public:
  using MEdge = std::array<int, 3>;  // {u, v, mult}, u < v

  Multigraph() = default;
  explicit Multigraph(int order);
  Multigraph(int order, std::vector<MEdge> edges);

  int order() const { return n_; }
  const std::vector<MEdge>& edges() const { return edges_; }
  int multiplicity(int u, int v) const;
  /// Neighbors counted once regardless of multiplicity, ascending.
  const std::vector<int>& distinct_neighbors(int v) const;
  int distinct_degree(int v) const;
  Graph underlying_simple() const;

  bool operator==(const Multigraph& other) const {
    return n_ == other.n_ && edges_ == other.edges_;
  }

 private:
  int n_ = 0;
  std::vector<MEdge> edges_;
  std::vector<std::vector<std::pair<int, int>>> adj_;  // (neighbor, mult)
  std::vector<std::vector<int>> nbrs_;
};

// graph6 encoding (63-offset printable bytes, upper-triangle column-major
// bits). Orders up to 258047 are supported; an optional ">>graph6<<" header
// and surrounding whitespace are accepted on input.
Graph parse_graph6(const std::string& text);
std::string write_graph6(const Graph& g);

// Basic operations.
Graph complement(const Graph& g);
Graph disjoint_union(const Graph& g, const Graph& h);
/// Glues h's vertex v onto g's vertex u. g keeps ids 0..g.order()-1; the
/// remaining vertices of h follow in their original relative order.
Graph identify_vertices(const Graph& g, int u, const Graph& h, int v);
/// Replaces every edge by a path of length two. Original ids are preserved;
/// the subdivision vertex of the i-th edge (in sorted edge order) gets id
/// g.order() + i.
Graph subdivide_each_edge(const Graph& g);
/// Vertices are g's edges in sorted order; two are adjacent iff they share an
/// endpoint.
Graph line_graph(const Graph& g);

// Predicates.
bool is_connected(const Graph& g);
bool is_tree(const Graph& g);
bool is_triangle_free(const Graph& g);

// Families.
Graph path_graph(int n);               // P_n, n >= 1
Graph cycle_graph(int n);              // C_n, n >= 3
Graph star_graph(int m);               // K_{1,m} with center 0, m >= 0
Graph complete_graph(int n);           // K_n, n >= 0
Graph empty_graph(int n);              // complement of K_n
/// Double broom B(3,a,b), a >= b >= 1: path u=0, v=1, w=2 with a leaves
/// 3..2+a attached to u and b leaves 3+a..2+a+b attached to w. Order a+b+3.
Graph double_broom(int a, int b);
/// Ear graph G_n for even n >= 4, on n+1 vertices u=0, w=1, v_i=1+i: the path
/// v_1..v_{n-1} plus edges uv_1, wv_1, uv_{n-1}, wv_{n-1}.
Graph ear_graph(int n);
Graph make_family(const std::string& name, const std::vector<int>& params);

}  // namespace bell
