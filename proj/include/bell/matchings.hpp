#pragma once

#include <compare>
#include <optional>
#include <vector>

#include "bell/bell_graph.hpp"
#include "bell/graph.hpp"
#include "bell/partition.hpp"

namespace bell {

/// A matching over vertex ids 0..n-1: pairwise vertex-disjoint edges, stored
/// normalized (u < v, sorted). Which graph the edges belong to is checked by
/// the operations that need it, not by the type.
class Matching {
 public:
  Matching(int base_order, EdgeList edges);

  int base_order() const { return n_; }
  int size() const { return static_cast<int>(edges_.size()); }
  const EdgeList& edges() const { return edges_; }
  /// Partner of v, or -1 when v is unmatched.
  int mate(int v) const;
  std::vector<int> unmatched() const;  // ascending

  friend bool operator==(const Matching& a, const Matching& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }
  friend std::strong_ordering operator<=>(const Matching& a,
                                          const Matching& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.edges_ <=> b.edges_;
  }

 private:
  int n_ = 0;
  EdgeList edges_;
  std::vector<int> mate_;
};

/// Every matching of g with at least min_size edges (the empty matching
/// qualifies when min_size is 0), sorted, each exactly once.
std::vector<Matching> enumerate_matchings(const Graph& g, int min_size);

/// True when the two matchings differ by moving one endpoint: the symmetric
/// difference is one edge, or two edges sharing a vertex. Equivalently the
/// spanning subgraphs agree after deleting some single vertex.
bool matching_move_adjacent(const Matching& a, const Matching& b);

/// The matching reconfiguration graph M_k(g): vertex i is matchings[i].
struct MatchingGraph {
  Graph graph;
  std::vector<Matching> matchings;

  int index_of(const Matching& m) const;  // throws IndexOutOfRange
};

MatchingGraph build_matching_graph(const Graph& g, int k);

/// The three equivalent adjacency tests for a pair of near-perfect matchings,
/// each evaluated independently by brute force over the candidate vertex w.
/// Writing v for m1's unmatched vertex and u for m2's:
///   delete_vertex: some w with g<m1> - w == g<m2> - w,
///   edge_swap:     some w with m1 == (m2 minus vw) plus uw,
///   remainder:     some w with uw in m1, vw in m2, and the matchings equal
///                  once every edge touching u, v or w is dropped.
struct NearPerfectAdjacency {
  int m1_unmatched = -1;       // v
  int m2_unmatched = -1;       // u
  std::optional<int> witness;  // least w passing the delete_vertex test
  bool delete_vertex = false;
  bool edge_swap = false;
  bool remainder = false;
};

NearPerfectAdjacency near_perfect_adjacent(const Graph& g, const Matching& m1,
                                           const Matching& m2);

/// The matched pairs of m as two-element parts plus a singleton per unmatched
/// vertex, read as a stable partition of complement(g). budget -1 means the
/// minimal n - |m|; pass n - k to land in the budget-(n-k) Bell graph.
StablePartition phi(const Matching& m, const Graph& g, int budget = -1);

/// Maps every vertex of M_k(g) through phi and checks an edge-exact bijection
/// onto B_{n-k}(complement(g)). Returns true; throws CounterexampleFound with
/// the first discrepancy otherwise.
bool verify_phi_isomorphism(const Graph& g, int k);

/// count is 0, 1, or 2, where 2 means "two or more" (the search stops there).
struct PerfectMatchingReport {
  int count = 0;
  std::optional<Matching> matching;  // set exactly when count == 1
};

PerfectMatchingReport unique_perfect_matching(const Graph& g);

/// Glues h1's v1 onto h2's v2. Each vertex must be uniquely unmatched in its
/// graph: deleting it leaves exactly one perfect matching.
Graph join_uniquely_unmatched(const Graph& h1, int v1, const Graph& h2,
                              int v2);

/// A checked witness that B_budget(base) is isomorphic to target: iso[i] is
/// the Bell vertex standing for target vertex i. The constructor rebuilds the
/// Bell graph and verifies the bijection edge-for-edge, so a constructed
/// certificate is always valid.
struct RealizationCertificate {
  Graph target;
  Graph base;
  int budget = 0;
  std::vector<int> iso;

  RealizationCertificate(Graph target, Graph base, int budget,
                         std::vector<int> iso);
};

/// Realizes a tree T of order n as B_n(complement of the once-subdivided T).
/// The certificate labels target vertex v by the partition pairing every
/// other tree vertex with the subdivision vertex on its path toward v.
RealizationCertificate realize_tree(const Graph& t);

/// Realizes the cycle C_m. Bases: K_3 + K_1 (m = 3), K_2 + two isolated
/// vertices (m = 4), complement of C_m (odd m >= 5), complement of the ear
/// graph on m - 1 vertices (even m >= 6).
RealizationCertificate realize_cycle(int m);

}  // namespace bell
