#include "bell/bell_graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace bell {

BellGraph::BellGraph(Graph base, int budget,
                     std::vector<StablePartition> vertices,
                     std::vector<BellEdge> edges)
    : base_(std::move(base)), budget_(budget), vertices_(std::move(vertices)) {
  if (budget_ < 1) throw std::invalid_argument("budget must be >= 1");
  for (int i = 0; i < static_cast<int>(vertices_.size()); ++i) {
    const auto& p = vertices_[i];
    if (p.budget() != budget_)
      throw std::invalid_argument("partition budget differs from k");
    if (p.ground_size() != base_.order())
      throw std::invalid_argument("partition ground set differs from base");
    if (!index_.emplace(p, i).second)
      throw std::invalid_argument("duplicate partition vertex");
  }
  for (auto& e : edges) {
    if (e.u > e.v) std::swap(e.u, e.v);
    if (e.u < 0 || e.v >= order() || e.u == e.v)
      throw std::invalid_argument("bell edge endpoint out of range");
    std::sort(e.witnesses.begin(), e.witnesses.end());
  }
  std::sort(edges.begin(), edges.end(),
            [](const BellEdge& a, const BellEdge& b) {
              return std::pair(a.u, a.v) < std::pair(b.u, b.v);
            });
  for (size_t i = 1; i < edges.size(); ++i)
    if (edges[i].u == edges[i - 1].u && edges[i].v == edges[i - 1].v)
      throw std::invalid_argument("duplicate bell edge");
  edges_ = std::move(edges);
}

const StablePartition& BellGraph::vertex(int id) const {
  if (id < 0 || id >= order()) throw IndexOutOfRange("bell vertex id");
  return vertices_[id];
}

int BellGraph::find_index(const StablePartition& p) const {
  auto it = index_.find(p);
  return it == index_.end() ? -1 : it->second;
}

int BellGraph::index_of(const StablePartition& p) const {
  int id = find_index(p);
  if (id < 0) throw IndexOutOfRange("partition is not a vertex");
  return id;
}

const BellEdge* BellGraph::find_edge(int u, int v) const {
  if (u > v) std::swap(u, v);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), std::pair(u, v),
                             [](const BellEdge& e, const std::pair<int, int>& k) {
                               return std::pair(e.u, e.v) < k;
                             });
  if (it != edges_.end() && it->u == u && it->v == v) return &*it;
  return nullptr;
}

Graph BellGraph::to_simple() const {
  EdgeList es;
  es.reserve(edges_.size());
  for (const auto& e : edges_) es.emplace_back(e.u, e.v);
  return Graph(order(), std::move(es));
}

Multigraph BellGraph::to_multigraph() const {
  std::vector<Multigraph::MEdge> es;
  es.reserve(edges_.size());
  for (const auto& e : edges_)
    es.push_back({e.u, e.v, static_cast<int>(e.witnesses.size())});
  return Multigraph(order(), std::move(es));
}

BellGraph build_bell(const Graph& g, int k) {
  std::vector<StablePartition> vertices = enumerate_stable_partitions(g, k);
  std::map<StablePartition, int> index;
  for (int i = 0; i < static_cast<int>(vertices.size()); ++i)
    index.emplace(vertices[i], i);

  std::map<std::pair<int, int>, std::vector<int>> edge_witnesses;
  for (int p = 0; p < static_cast<int>(vertices.size()); ++p) {
    for (const auto& mv : legal_moves(vertices[p], g)) {
      int q = index.at(mv.result);
      if (p < q) edge_witnesses[{p, q}].push_back(mv.witness);
    }
  }
  std::vector<BellEdge> edges;
  edges.reserve(edge_witnesses.size());
  for (auto& [pq, ws] : edge_witnesses) {
    std::sort(ws.begin(), ws.end());
    ws.erase(std::unique(ws.begin(), ws.end()), ws.end());
    edges.push_back({pq.first, pq.second, std::move(ws)});
  }
  return BellGraph(g, k, std::move(vertices), std::move(edges));
}

Graph build_coloring_graph(const Graph& g, int k) {
  if (k < 1) throw std::invalid_argument("coloring count must be >= 1");
  int n = g.order();
  double size = 1;
  for (int i = 0; i < n; ++i) size *= k;
  if (size > 2e6)
    throw std::invalid_argument("coloring graph too large for a cross-check");

  std::vector<std::vector<int>> colorings;
  std::vector<int> color(n, -1);
  auto rec = [&](auto&& self, int v) -> void {
    if (v == n) {
      colorings.push_back(color);
      return;
    }
    for (int c = 0; c < k; ++c) {
      bool ok = true;
      for (int u : g.neighbors(v))
        if (u < v && color[u] == c) {
          ok = false;
          break;
        }
      if (!ok) continue;
      color[v] = c;
      self(self, v + 1);
      color[v] = -1;
    }
  };
  rec(rec, 0);

  EdgeList es;
  for (int i = 0; i < static_cast<int>(colorings.size()); ++i)
    for (int j = i + 1; j < static_cast<int>(colorings.size()); ++j) {
      int diff = 0;
      for (int v = 0; v < n && diff < 2; ++v)
        if (colorings[i][v] != colorings[j][v]) ++diff;
      if (diff == 1) es.emplace_back(i, j);
    }
  return Graph(static_cast<int>(colorings.size()), std::move(es));
}

DegreeStats degree_stats(const BellGraph& b) {
  DegreeStats st;
  Graph s = b.to_simple();
  std::vector<int> deg(s.order());
  int best = -1;
  for (int v = 0; v < s.order(); ++v) {
    deg[v] = s.degree(v);
    best = std::max(best, deg[v]);
  }
  for (int v = 0; v < s.order(); ++v)
    if (deg[v] == best) st.max_degree_vertices.push_back(v);
  st.degree_sequence = s.degree_sequence();
  st.edge_count = s.edge_count();
  return st;
}

nlohmann::json bell_to_json(const BellGraph& b) {
  nlohmann::json j;
  j["base"] = write_graph6(b.base());
  j["k"] = b.budget();
  auto verts = nlohmann::json::array();
  for (const auto& p : b.vertices()) verts.push_back(p.to_string());
  j["vertices"] = std::move(verts);
  auto edges = nlohmann::json::array();
  for (const auto& e : b.edges())
    edges.push_back(nlohmann::json::array({e.u, e.v, e.witnesses}));
  j["edges"] = std::move(edges);
  return j;
}

BellGraph bell_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("base") || !j.contains("k") ||
      !j.contains("vertices") || !j.contains("edges"))
    throw std::invalid_argument(
        "bell graph json needs base, k, vertices, edges");
  Graph base = parse_graph6(j.at("base").get<std::string>());
  int k = j.at("k").get<int>();
  std::vector<StablePartition> vertices;
  for (const auto& text : j.at("vertices"))
    vertices.push_back(StablePartition::from_string(text.get<std::string>(), k));
  std::vector<BellEdge> edges;
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 3)
      throw std::invalid_argument("bell edge entries are [u, v, witnesses]");
    edges.push_back(
        {e.at(0).get<int>(), e.at(1).get<int>(), e.at(2).get<std::vector<int>>()});
  }
  return BellGraph(std::move(base), k, std::move(vertices), std::move(edges));
}

nlohmann::json multigraph_to_json(const Multigraph& m) {
  nlohmann::json j;
  j["n_vertices"] = m.order();
  auto edges = nlohmann::json::array();
  for (auto [u, v, mult] : m.edges())
    edges.push_back(nlohmann::json::array({u, v, mult}));
  j["edges"] = std::move(edges);
  return j;
}

Multigraph multigraph_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n_vertices") || !j.contains("edges"))
    throw std::invalid_argument("multigraph json needs n_vertices and edges");
  int n = j.at("n_vertices").get<int>();
  std::vector<Multigraph::MEdge> edges;
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 3)
      throw std::invalid_argument("multigraph edge entries are [u, v, mult]");
    edges.push_back({e.at(0).get<int>(), e.at(1).get<int>(), e.at(2).get<int>()});
  }
  return Multigraph(n, std::move(edges));
}

}  // namespace bell
