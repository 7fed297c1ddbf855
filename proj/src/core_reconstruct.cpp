#include "bell/core_reconstruct.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "bell/canonical.hpp"

namespace bell {

namespace {

// Connected components as ascending id lists, ordered by smallest member.
std::vector<std::vector<int>> components_of(const Graph& g) {
  std::vector<std::vector<int>> comps;
  std::vector<char> seen(g.order(), 0);
  for (int s = 0; s < g.order(); ++s) {
    if (seen[s]) continue;
    std::vector<int> comp{s};
    seen[s] = 1;
    for (std::size_t h = 0; h < comp.size(); ++h)
      for (int w : g.neighbors(comp[h]))
        if (!seen[w]) {
          seen[w] = 1;
          comp.push_back(w);
        }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

// Backtracking over partitions of E(c) into cliques with every vertex in at
// most two; c is connected of order >= 2 and is not a triangle.
class KrauszSearch {
 public:
  explicit KrauszSearch(const Graph& c)
      : c_(c),
        count_(c.order(), 0),
        covered_(c.order(), std::vector<char>(c.order(), 0)),
        left_(c.edge_count()) {}

  Graph run() {
    if (!search()) throw NotALineGraph("no edge partition into cliques with "
                                       "every vertex in at most two");
    return build_root();
  }

 private:
  bool search() {
    if (left_ == 0) return true;
    Edge e{-1, -1};
    for (const auto& cand : c_.edges())
      if (!covered_[cand.first][cand.second]) {
        e = cand;
        break;
      }
    auto [u, v] = e;
    if (count_[u] >= 2 || count_[v] >= 2) return false;

    std::vector<int> eligible;
    for (int w : c_.neighbors(u))
      if (w != v && count_[w] < 2 && c_.adjacent(v, w) &&
          !covered_[std::min(u, w)][std::max(u, w)] &&
          !covered_[std::min(v, w)][std::max(v, w)])
        eligible.push_back(w);

    std::vector<std::vector<int>> candidates;
    std::vector<int> clique{u, v};
    grow(clique, eligible, 0, candidates);
    std::sort(candidates.begin(), candidates.end(),
              [](const auto& a, const auto& b) { return a.size() > b.size(); });

    for (const auto& k : candidates) {
      place(k);
      if (search()) return true;
      unplace(k);
    }
    return false;
  }

  // Extends clique by eligible[from..]; every extension is recorded.
  void grow(std::vector<int>& clique, const std::vector<int>& eligible,
            std::size_t from, std::vector<std::vector<int>>& out) {
    out.push_back(clique);
    for (std::size_t i = from; i < eligible.size(); ++i) {
      int w = eligible[i];
      bool fits = true;
      for (int x : clique)
        if (!c_.adjacent(x, w) || covered_[std::min(x, w)][std::max(x, w)]) {
          fits = false;
          break;
        }
      if (!fits) continue;
      clique.push_back(w);
      grow(clique, eligible, i + 1, out);
      clique.pop_back();
    }
  }

  void place(const std::vector<int>& k) {
    cliques_.push_back(k);
    for (int x : k) ++count_[x];
    for (std::size_t i = 0; i < k.size(); ++i)
      for (std::size_t j = i + 1; j < k.size(); ++j) {
        covered_[std::min(k[i], k[j])][std::max(k[i], k[j])] = 1;
        --left_;
      }
  }

  void unplace(const std::vector<int>& k) {
    cliques_.pop_back();
    for (int x : k) --count_[x];
    for (std::size_t i = 0; i < k.size(); ++i)
      for (std::size_t j = i + 1; j < k.size(); ++j) {
        covered_[std::min(k[i], k[j])][std::max(k[i], k[j])] = 0;
        ++left_;
      }
  }

  Graph build_root() {
    // Vertices of c in exactly one clique get a phantom endpoint clique, so
    // every vertex, as an edge of the root, joins exactly two root vertices.
    std::vector<std::vector<int>> in(c_.order());
    for (std::size_t i = 0; i < cliques_.size(); ++i)
      for (int x : cliques_[i]) in[x].push_back(static_cast<int>(i));
    int next = static_cast<int>(cliques_.size());
    for (int x = 0; x < c_.order(); ++x)
      if (in[x].size() == 1) in[x].push_back(next++);
    EdgeList es;
    for (int x = 0; x < c_.order(); ++x) es.emplace_back(in[x][0], in[x][1]);
    return Graph(next, std::move(es));
  }

  const Graph& c_;
  std::vector<std::vector<int>> cliques_;
  std::vector<int> count_;
  std::vector<std::vector<char>> covered_;
  int left_;
};

}  // namespace

std::vector<int> totally_doubled(const Multigraph& bm) {
  std::vector<char> ok(bm.order(), 1);
  for (const auto& e : bm.edges())
    if (e[2] != 2) ok[e[0]] = ok[e[1]] = 0;
  std::vector<int> out;
  for (int v = 0; v < bm.order(); ++v)
    if (ok[v]) out.push_back(v);
  return out;
}

int select_singleton_candidate(const Multigraph& bm) {
  std::vector<int> d = totally_doubled(bm);
  if (d.empty())
    throw NotABellMultigraph("no totally doubled vertex; a Bell multigraph "
                             "always contains the all-singletons partition");
  int best = d.front();
  for (int v : d)
    if (bm.distinct_degree(v) > bm.distinct_degree(best)) best = v;
  return best;
}

NeighborhoodGraph neighborhood_line_graph(const Multigraph& bm, int q) {
  NeighborhoodGraph out;
  out.ids = bm.distinct_neighbors(q);
  out.graph = bm.underlying_simple().induced(out.ids);
  return out;
}

std::vector<RootRecovery> root_graph(const Graph& l) {
  std::vector<RootRecovery> out;
  for (std::vector<int>& ids : components_of(l)) {
    RootRecovery r;
    r.component = l.induced(ids);
    r.component_ids = std::move(ids);
    if (r.component.order() == 1) {
      r.root = path_graph(2);
    } else if (r.component.order() == 3 && r.component.edge_count() == 3) {
      r.root = complete_graph(3);
      r.ambiguous = true;
    } else {
      r.root = KrauszSearch(r.component).run();
    }
    if (!is_isomorphic(line_graph(r.root), r.component))
      throw NotALineGraph("recovered root fails the line graph check");
    out.push_back(std::move(r));
  }
  return out;
}

TriangleRoot disambiguate_triangle(const Multigraph& bm, int q,
                                   const std::array<int, 3>& triangle) {
  for (int w : bm.distinct_neighbors(triangle[0])) {
    if (w == q) continue;
    if (bm.multiplicity(w, triangle[1]) > 0 &&
        bm.multiplicity(w, triangle[2]) > 0)
      return TriangleRoot::K3;
  }
  return TriangleRoot::K13;
}

CoreReconstruction reconstruct_core_trace(const Multigraph& bm,
                                          int forced_candidate) {
  CoreReconstruction out;
  if (forced_candidate >= 0) {
    std::vector<int> d = totally_doubled(bm);
    if (!std::binary_search(d.begin(), d.end(), forced_candidate))
      throw std::invalid_argument(
          "forced candidate is not totally doubled");
    out.q = forced_candidate;
  } else if (forced_candidate == -1) {
    out.q = select_singleton_candidate(bm);
  } else {
    throw std::invalid_argument("forced candidate must be -1 or a vertex id");
  }
  out.neighborhood = neighborhood_line_graph(bm, out.q);
  try {
    out.recoveries = root_graph(out.neighborhood.graph);
  } catch (const NotALineGraph& e) {
    throw NotABellMultigraph(
        std::string("candidate neighborhood is not a line graph: ") +
        e.what());
  }
  Graph roots(0);
  for (RootRecovery& r : out.recoveries) {
    if (r.ambiguous) {
      std::array<int, 3> tri;
      for (int i = 0; i < 3; ++i)
        tri[i] = out.neighborhood.ids[r.component_ids[i]];
      r.resolved = disambiguate_triangle(bm, out.q, tri);
      if (*r.resolved == TriangleRoot::K13) r.root = star_graph(3);
    }
    roots = disjoint_union(roots, r.root);
  }
  out.core = complement(roots);
  return out;
}

Graph reconstruct_core(const Multigraph& bm) {
  return reconstruct_core_trace(bm).core;
}

Graph core(const Graph& g) {
  std::vector<int> keep;
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) != g.order() - 1) keep.push_back(v);
  return g.induced(keep);
}

}  // namespace bell
