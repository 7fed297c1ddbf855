#include "bell/matchings.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace bell {

namespace {

// Edges of es avoiding every vertex in vs. Preserves order.
EdgeList drop_touching(const EdgeList& es, std::initializer_list<int> vs) {
  EdgeList out;
  for (const auto& e : es) {
    bool hit = false;
    for (int v : vs)
      if (e.first == v || e.second == v) hit = true;
    if (!hit) out.push_back(e);
  }
  return out;
}

int edge_index(const Graph& g, int u, int v) {
  if (u > v) std::swap(u, v);
  auto it = std::lower_bound(g.edges().begin(), g.edges().end(), Edge{u, v});
  return static_cast<int>(it - g.edges().begin());
}

void require_edges_of(const Graph& g, const Matching& m, const char* who) {
  if (m.base_order() != g.order())
    throw std::invalid_argument(std::string(who) +
                                ": matching base order mismatch");
  for (const auto& [u, v] : m.edges())
    if (!g.adjacent(u, v))
      throw std::invalid_argument(std::string(who) +
                                  ": matching edge not in the base graph");
}

}  // namespace

Matching::Matching(int base_order, EdgeList edges)
    : n_(base_order), edges_(std::move(edges)) {
  if (n_ < 0) throw std::invalid_argument("matching base order is negative");
  mate_.assign(n_, -1);
  for (auto& [u, v] : edges_) {
    if (u > v) std::swap(u, v);
    if (u < 0 || v >= n_)
      throw IndexOutOfRange("matching edge endpoint out of range");
    if (u == v) throw std::invalid_argument("matching edge is a self-loop");
  }
  std::sort(edges_.begin(), edges_.end());
  for (const auto& [u, v] : edges_) {
    if (mate_[u] != -1 || mate_[v] != -1)
      throw std::invalid_argument("matching edges share a vertex");
    mate_[u] = v;
    mate_[v] = u;
  }
}

int Matching::mate(int v) const {
  if (v < 0 || v >= n_) throw IndexOutOfRange("matching vertex out of range");
  return mate_[v];
}

std::vector<int> Matching::unmatched() const {
  std::vector<int> out;
  for (int v = 0; v < n_; ++v)
    if (mate_[v] == -1) out.push_back(v);
  return out;
}

std::vector<Matching> enumerate_matchings(const Graph& g, int min_size) {
  if (min_size < 0) min_size = 0;
  const EdgeList& es = g.edges();
  const int m = static_cast<int>(es.size());
  std::vector<Matching> out;
  std::vector<char> used(g.order(), 0);
  EdgeList cur;

  // Extends cur with edges of index >= from; every matching is reached once,
  // with its edges in increasing index order.
  auto rec = [&](auto&& self, int from) -> void {
    if (static_cast<int>(cur.size()) >= min_size)
      out.emplace_back(g.order(), cur);
    for (int i = from; i < m; ++i) {
      auto [u, v] = es[i];
      if (used[u] || used[v]) continue;
      used[u] = used[v] = 1;
      cur.push_back(es[i]);
      self(self, i + 1);
      cur.pop_back();
      used[u] = used[v] = 0;
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

bool matching_move_adjacent(const Matching& a, const Matching& b) {
  if (a.base_order() != b.base_order()) return false;
  EdgeList diff;
  std::set_symmetric_difference(a.edges().begin(), a.edges().end(),
                                b.edges().begin(), b.edges().end(),
                                std::back_inserter(diff));
  if (diff.empty() || diff.size() > 2) return false;
  if (diff.size() == 1) return true;
  const Edge& e = diff[0];
  const Edge& f = diff[1];
  return e.first == f.first || e.first == f.second || e.second == f.first ||
         e.second == f.second;
}

int MatchingGraph::index_of(const Matching& m) const {
  auto it = std::lower_bound(matchings.begin(), matchings.end(), m);
  if (it == matchings.end() || !(*it == m))
    throw IndexOutOfRange("matching is not a vertex of this matching graph");
  return static_cast<int>(it - matchings.begin());
}

MatchingGraph build_matching_graph(const Graph& g, int k) {
  std::vector<Matching> ms = enumerate_matchings(g, k);
  const int n = static_cast<int>(ms.size());
  EdgeList es;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (matching_move_adjacent(ms[i], ms[j])) es.emplace_back(i, j);
  return MatchingGraph{Graph(n, std::move(es)), std::move(ms)};
}

NearPerfectAdjacency near_perfect_adjacent(const Graph& g, const Matching& m1,
                                           const Matching& m2) {
  const int n = g.order();
  if (m1.base_order() != n || m2.base_order() != n)
    throw NotNearPerfect("matching is over a different vertex set");
  if (n % 2 == 0)
    throw NotNearPerfect("near-perfect matchings need a base of odd order");
  for (const Matching* m : {&m1, &m2}) {
    if (m->size() != (n - 1) / 2)
      throw NotNearPerfect("matching does not have (n-1)/2 edges");
    for (const auto& [u, v] : m->edges())
      if (!g.adjacent(u, v))
        throw NotNearPerfect("matching edge missing from the base graph");
  }
  if (m1 == m2) throw NotNearPerfect("the two matchings must differ");

  NearPerfectAdjacency res;
  res.m1_unmatched = m1.unmatched().front();
  res.m2_unmatched = m2.unmatched().front();
  const int v = res.m1_unmatched;
  const int u = res.m2_unmatched;

  for (int w = 0; w < n; ++w) {
    if (!res.delete_vertex &&
        drop_touching(m1.edges(), {w}) == drop_touching(m2.edges(), {w})) {
      res.delete_vertex = true;
      res.witness = w;
    }
    if (!res.edge_swap && m2.mate(v) == w) {
      EdgeList swapped = drop_touching(m2.edges(), {v});
      swapped.emplace_back(std::min(u, w), std::max(u, w));
      std::sort(swapped.begin(), swapped.end());
      if (swapped == m1.edges()) res.edge_swap = true;
    }
    if (!res.remainder && m1.mate(u) == w && m2.mate(v) == w &&
        drop_touching(m1.edges(), {u, v, w}) ==
            drop_touching(m2.edges(), {u, v, w}))
      res.remainder = true;
  }
  return res;
}

StablePartition phi(const Matching& m, const Graph& g, int budget) {
  if (!is_triangle_free(g))
    throw TrianglePresent("phi needs a triangle-free base graph");
  require_edges_of(g, m, "phi");
  const int need = g.order() - m.size();
  if (budget < 0) budget = need;
  if (budget < need)
    throw std::invalid_argument("phi: budget below the number of parts");
  std::vector<std::vector<int>> parts;
  for (const auto& [u, v] : m.edges()) parts.push_back({u, v});
  for (int w : m.unmatched()) parts.push_back({w});
  return StablePartition(budget, std::move(parts));
}

bool verify_phi_isomorphism(const Graph& g, int k) {
  if (!is_triangle_free(g))
    throw TrianglePresent("phi isomorphism needs a triangle-free graph");
  if (k < 0) k = 0;
  const int n = g.order();
  MatchingGraph mg = build_matching_graph(g, k);
  if (n == 0) return true;  // both sides trivial
  if (n - k < 1) {
    // No partition has fewer than one part, and no matching k or more edges.
    if (mg.graph.order() != 0)
      throw CounterexampleFound("phi: matchings exist but no partitions can");
    return true;
  }
  BellGraph b = build_bell(complement(g), n - k);
  if (b.order() != mg.graph.order())
    throw CounterexampleFound("phi: vertex counts differ: " +
                              std::to_string(mg.graph.order()) +
                              " matchings vs " + std::to_string(b.order()) +
                              " partitions");
  std::vector<int> image(mg.graph.order());
  std::vector<char> seen(b.order(), 0);
  for (int i = 0; i < mg.graph.order(); ++i) {
    int id = b.find_index(phi(mg.matchings[i], g, n - k));
    if (id < 0)
      throw CounterexampleFound("phi: image partition is not a Bell vertex");
    if (seen[id])
      throw CounterexampleFound("phi: two matchings map to one partition");
    seen[id] = 1;
    image[i] = id;
  }
  if (mg.graph.edge_count() != static_cast<int>(b.edges().size()))
    throw CounterexampleFound(
        "phi: edge counts differ: " + std::to_string(mg.graph.edge_count()) +
        " vs " + std::to_string(b.edges().size()));
  for (const auto& [i, j] : mg.graph.edges())
    if (b.find_edge(image[i], image[j]) == nullptr)
      throw CounterexampleFound("phi: adjacent matchings " + std::to_string(i) +
                                "," + std::to_string(j) +
                                " map to nonadjacent partitions");
  return true;
}

namespace {

void count_perfect(const Graph& g, std::vector<int>& mate, int& count,
                   EdgeList& first, EdgeList& cur) {
  if (count >= 2) return;
  int v = -1;
  for (int i = 0; i < g.order(); ++i)
    if (mate[i] == -1) {
      v = i;
      break;
    }
  if (v == -1) {
    if (++count == 1) first = cur;
    return;
  }
  for (int w : g.neighbors(v)) {
    if (mate[w] != -1) continue;
    mate[v] = w;
    mate[w] = v;
    cur.emplace_back(v, w);
    count_perfect(g, mate, count, first, cur);
    cur.pop_back();
    mate[v] = -1;
    mate[w] = -1;
    if (count >= 2) return;
  }
}

}  // namespace

PerfectMatchingReport unique_perfect_matching(const Graph& g) {
  PerfectMatchingReport rep;
  if (g.order() % 2 != 0) return rep;
  std::vector<int> mate(g.order(), -1);
  EdgeList first, cur;
  count_perfect(g, mate, rep.count, first, cur);
  if (rep.count == 1) rep.matching = Matching(g.order(), first);
  return rep;
}

Graph join_uniquely_unmatched(const Graph& h1, int v1, const Graph& h2,
                              int v2) {
  auto check = [](const Graph& h, int v, const char* side) {
    PerfectMatchingReport rep = unique_perfect_matching(h.without_vertex(v));
    if (rep.count != 1)
      throw NotUniquelyUnmatched(
          std::string(side) + " minus its glue vertex has " +
          (rep.count == 0 ? "no perfect matching" : "several perfect matchings"));
  };
  check(h1, v1, "first graph");
  check(h2, v2, "second graph");
  return identify_vertices(h1, v1, h2, v2);
}

RealizationCertificate::RealizationCertificate(Graph target_, Graph base_,
                                               int budget_,
                                               std::vector<int> iso_)
    : target(std::move(target_)),
      base(std::move(base_)),
      budget(budget_),
      iso(std::move(iso_)) {
  BellGraph b = build_bell(base, budget);
  const int m = target.order();
  if (b.order() != m)
    throw CounterexampleFound(
        "realization: Bell graph has " + std::to_string(b.order()) +
        " vertices, target has " + std::to_string(m));
  if (static_cast<int>(iso.size()) != m)
    throw CounterexampleFound("realization: bijection has wrong length");
  std::vector<char> seen(m, 0);
  for (int id : iso) {
    if (id < 0 || id >= m)
      throw CounterexampleFound("realization: bijection value out of range");
    if (seen[id]) throw CounterexampleFound("realization: bijection repeats");
    seen[id] = 1;
  }
  if (static_cast<int>(b.edges().size()) != target.edge_count())
    throw CounterexampleFound(
        "realization: edge counts differ: " +
        std::to_string(b.edges().size()) + " vs " +
        std::to_string(target.edge_count()));
  for (const auto& [i, j] : target.edges())
    if (b.find_edge(iso[i], iso[j]) == nullptr)
      throw CounterexampleFound("realization: target edge " +
                                std::to_string(i) + "," + std::to_string(j) +
                                " has no Bell counterpart");
}

RealizationCertificate realize_tree(const Graph& t) {
  if (!is_tree(t)) throw NotATree("realize_tree needs a tree");
  const int n = t.order();
  Graph ts = subdivide_each_edge(t);
  Graph base = complement(ts);
  BellGraph b = build_bell(base, n);

  std::vector<int> iso(n);
  for (int v = 0; v < n; ++v) {
    // Parent pointers toward v; pairing each other vertex with the
    // subdivision point of its parent edge is the unique near-perfect
    // matching of the subdivided tree that leaves v free.
    std::vector<int> parent(n, -2);
    std::vector<int> queue{v};
    parent[v] = -1;
    for (size_t h = 0; h < queue.size(); ++h)
      for (int y : t.neighbors(queue[h]))
        if (parent[y] == -2) {
          parent[y] = queue[h];
          queue.push_back(y);
        }
    EdgeList pairs;
    for (int w = 0; w < n; ++w)
      if (w != v) pairs.emplace_back(w, n + edge_index(t, w, parent[w]));
    int id = b.find_index(phi(Matching(ts.order(), pairs), ts, n));
    if (id < 0)
      throw CounterexampleFound(
          "tree realization: matching image is not a Bell vertex");
    iso[v] = id;
  }
  return RealizationCertificate(t, std::move(base), n, std::move(iso));
}

RealizationCertificate realize_cycle(int m) {
  if (m < 3) throw BadCycleLength("cycle length must be at least 3");
  Graph base;
  int budget = 0;
  if (m == 3) {
    base = disjoint_union(complete_graph(3), complete_graph(1));
    budget = 3;
  } else if (m == 4) {
    base = disjoint_union(complete_graph(2), empty_graph(2));
    budget = 2;
  } else if (m % 2 == 1) {
    base = complement(cycle_graph(m));
    budget = (m + 1) / 2;
  } else {
    base = complement(ear_graph(m - 2));
    budget = m / 2;
  }
  BellGraph b = build_bell(base, budget);
  Graph s = b.to_simple();
  if (s.order() != m)
    throw CounterexampleFound("cycle realization: expected " +
                              std::to_string(m) + " Bell vertices, got " +
                              std::to_string(s.order()));
  for (int x = 0; x < m; ++x)
    if (s.degree(x) != 2)
      throw CounterexampleFound("cycle realization: Bell graph not 2-regular");
  std::vector<int> iso(m);
  std::vector<char> seen(m, 0);
  int prev = -1, cur = 0;
  for (int i = 0; i < m; ++i) {
    if (seen[cur])
      throw CounterexampleFound("cycle realization: Bell graph is not one cycle");
    seen[cur] = 1;
    iso[i] = cur;
    const auto& nb = s.neighbors(cur);
    int next = (nb[0] == prev) ? nb[1] : nb[0];
    prev = cur;
    cur = next;
  }
  return RealizationCertificate(cycle_graph(m), std::move(base), budget,
                                std::move(iso));
}

}  // namespace bell
