#include "bell/cliques.hpp"

#include <algorithm>
#include <map>

#include "bell/canonical.hpp"
#include "bell/enumerate.hpp"
#include "bell/errors.hpp"

namespace bell {

namespace {

std::vector<int> intersect(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

// Witness sets of all clique edges, keyed by positions into ids.
std::map<std::pair<int, int>, std::vector<int>> edge_witness_sets(
    const BellGraph& b, const std::vector<int>& ids, CliqueClass& out) {
  std::map<std::pair<int, int>, std::vector<int>> wit;
  for (size_t i = 0; i < ids.size(); ++i)
    for (size_t j = i + 1; j < ids.size(); ++j) {
      const BellEdge* e = b.find_edge(ids[i], ids[j]);
      if (!e) throw NotAClique("vertices are not pairwise adjacent");
      wit[{static_cast<int>(i), static_cast<int>(j)}] = e->witnesses;
      if (e->witnesses.size() == 2)
        out.doubled_edges.emplace_back(std::min(ids[i], ids[j]),
                                       std::max(ids[i], ids[j]));
    }
  return wit;
}

CliqueClass classify_t_triangle(
    const BellGraph& b, const std::vector<int>& ids,
    const std::map<std::pair<int, int>, std::vector<int>>& wit,
    CliqueClass out) {
  for (const auto& [pos, ws] : wit)
    if (ws.size() != 1)
      throw CounterexampleFound("T-triangle edge with two witnesses");
  // realizer v_i certifies the edge opposite ids[i]
  std::array<int, 3> v = {wit.at({1, 2}).front(), wit.at({0, 2}).front(),
                          wit.at({0, 1}).front()};
  if (v[0] == v[1] || v[0] == v[2] || v[1] == v[2])
    throw CounterexampleFound("T-triangle realizers are not distinct");
  out.realizers = {v[0], v[1], v[2]};
  std::sort(out.realizers.begin(), out.realizers.end());

  bool cyclic = true;
  for (int i = 0; i < 3; ++i)
    if (!b.vertex(ids[i]).has_singleton(v[i])) cyclic = false;
  if (cyclic) {
    out.family = CliqueFamily::CYCLIC_T;
    return out;
  }
  std::vector<int> hubs;
  for (int i = 0; i < 3; ++i)
    if (b.vertex(ids[i]).has_part(out.realizers)) hubs.push_back(ids[i]);
  if (hubs.size() == 1) {
    out.family = CliqueFamily::RADIAL_T;
    out.hub = hubs.front();
    return out;
  }
  throw CounterexampleFound("triangle matches neither T-family");
}

CliqueClass classify_tetrahedron(const BellGraph& b, const std::vector<int>& ids,
                                 CliqueClass out) {
  std::array<CliqueClass, 4> face;
  std::vector<int> t_faces;
  for (int h = 0; h < 4; ++h) {
    std::vector<int> face_ids;
    for (int i = 0; i < 4; ++i)
      if (i != h) face_ids.push_back(ids[i]);
    face[h] = classify_clique(b, face_ids);
    if (face[h].family != CliqueFamily::S_CLIQUE) t_faces.push_back(h);
  }
  if (t_faces.size() == 1) {
    out.family = CliqueFamily::SPLIT_TETRA;
    out.hub = ids[t_faces.front()];  // the vertex outside the unique T-face
    out.realizers = face[t_faces.front()].realizers;
    return out;
  }
  if (t_faces.size() == 4) {
    out.family = CliqueFamily::FUSED_TETRA;
    std::vector<int> hubs;
    for (int h = 0; h < 4; ++h) {
      if (face[h].realizers != face[0].realizers)
        throw CounterexampleFound("fused tetrahedron faces disagree on realizers");
      if (face[h].family == CliqueFamily::RADIAL_T)
        hubs.push_back(*face[h].hub);
    }
    std::sort(hubs.begin(), hubs.end());
    hubs.erase(std::unique(hubs.begin(), hubs.end()), hubs.end());
    if (hubs.size() != 1)
      throw CounterexampleFound("fused tetrahedron without a common radial hub");
    out.hub = hubs.front();
    out.realizers = face[0].realizers;
    return out;
  }
  throw CounterexampleFound("tetrahedron face pattern matches no family");
}

}  // namespace

const char* family_name(CliqueFamily family) {
  switch (family) {
    case CliqueFamily::S_CLIQUE: return "S_CLIQUE";
    case CliqueFamily::CYCLIC_T: return "CYCLIC_T";
    case CliqueFamily::RADIAL_T: return "RADIAL_T";
    case CliqueFamily::SPLIT_TETRA: return "SPLIT_TETRA";
    case CliqueFamily::FUSED_TETRA: return "FUSED_TETRA";
  }
  return "UNKNOWN";
}

CliqueClass classify_clique(const BellGraph& b, std::vector<int> ids) {
  if (ids.empty()) throw NotAClique("empty vertex set");
  std::sort(ids.begin(), ids.end());
  if (std::adjacent_find(ids.begin(), ids.end()) != ids.end())
    throw NotAClique("vertices must be distinct");
  for (int id : ids) b.vertex(id);  // range check

  CliqueClass out;
  auto wit = edge_witness_sets(b, ids, out);
  int m = static_cast<int>(ids.size());
  if (m == 1) return out;  // vacuous anchor

  std::vector<int> common = wit.begin()->second;
  for (const auto& [pos, ws] : wit) common = intersect(common, ws);
  if (!common.empty()) {
    if (m >= 3 && common.size() > 1)
      throw CounterexampleFound("anchor is not unique on a clique of size >= 3");
    out.anchor = common.front();
    return out;
  }
  if (m == 3) return classify_t_triangle(b, ids, wit, std::move(out));
  if (m == 4) return classify_tetrahedron(b, ids, std::move(out));
  throw CounterexampleFound("clique of size >= 5 without a common anchor");
}

CliqueClass classify_triangle(const BellGraph& b, const std::array<int, 3>& ids) {
  return classify_clique(b, {ids[0], ids[1], ids[2]});
}

std::vector<std::vector<int>> enumerate_maximal_cliques(const Graph& g) {
  std::vector<std::vector<int>> out;
  std::vector<int> R;
  auto bk = [&](auto&& self, std::vector<int> P, std::vector<int> X) -> void {
    if (P.empty() && X.empty()) {
      out.push_back(R);
      return;
    }
    // pivot maximizing |P intersect N(u)|
    int pivot = -1, best = -1;
    for (const auto* side : {&P, &X})
      for (int u : *side) {
        int cnt = static_cast<int>(intersect(P, g.neighbors(u)).size());
        if (cnt > best) {
          best = cnt;
          pivot = u;
        }
      }
    std::vector<int> ext;
    for (int v : P)
      if (!g.adjacent(pivot, v)) ext.push_back(v);
    for (int v : ext) {
      R.push_back(v);
      self(self, intersect(P, g.neighbors(v)), intersect(X, g.neighbors(v)));
      R.pop_back();
      P.erase(std::find(P.begin(), P.end(), v));
      X.insert(std::lower_bound(X.begin(), X.end(), v), v);
    }
  };
  std::vector<int> all(g.order());
  for (int v = 0; v < g.order(); ++v) all[v] = v;
  bk(bk, all, {});
  for (auto& c : out) std::sort(c.begin(), c.end());
  std::sort(out.begin(), out.end());
  return out;
}

CliqueCensus clique_census(const BellGraph& b) {
  Graph g = b.to_simple();
  CliqueCensus census;
  std::vector<int> cur;
  auto handle = [&] {
    CliqueClass c = classify_clique(b, cur);
    switch (cur.size()) {
      case 3:
        if (c.family == CliqueFamily::S_CLIQUE) ++census.s_triangles;
        else if (c.family == CliqueFamily::CYCLIC_T) ++census.cyclic_triangles;
        else ++census.radial_triangles;
        break;
      case 4:
        if (c.family == CliqueFamily::S_CLIQUE) ++census.s_tetrahedra;
        else if (c.family == CliqueFamily::SPLIT_TETRA) ++census.split_tetrahedra;
        else ++census.fused_tetrahedra;
        break;
      default:
        ++census.larger_s_cliques;  // classify_clique enforces the S family
    }
  };
  auto extend = [&](auto&& self, const std::vector<int>& cands) -> void {
    for (size_t i = 0; i < cands.size(); ++i) {
      int v = cands[i];
      cur.push_back(v);
      if (cur.size() >= 3) handle();
      std::vector<int> next;
      for (size_t j = i + 1; j < cands.size(); ++j)
        if (g.adjacent(v, cands[j])) next.push_back(cands[j]);
      if (!next.empty()) self(self, next);
      cur.pop_back();
    }
  };
  std::vector<int> all(g.order());
  for (int v = 0; v < g.order(); ++v) all[v] = v;
  extend(extend, all);
  return census;
}

nlohmann::json census_to_json(const CliqueCensus& c) {
  nlohmann::json j;
  j["triangles"] = {{"s", c.s_triangles},
                    {"cyclic_t", c.cyclic_triangles},
                    {"radial_t", c.radial_triangles}};
  j["tetrahedra"] = {{"s", c.s_tetrahedra},
                     {"split", c.split_tetrahedra},
                     {"fused", c.fused_tetrahedra}};
  j["larger_s_cliques"] = c.larger_s_cliques;
  return j;
}

bool contains_induced(const Graph& pattern, const Graph& host) {
  int p = pattern.order(), n = host.order();
  if (p > n) return false;
  if (p == 0) return true;

  // Static placement order: seed with the max-degree pattern vertex, then
  // always place the vertex with the most already-placed neighbors.
  std::vector<int> order;
  std::vector<char> placed(p, 0);
  {
    int seed = 0;
    for (int v = 1; v < p; ++v)
      if (pattern.degree(v) > pattern.degree(seed)) seed = v;
    order.push_back(seed);
    placed[seed] = 1;
    while (static_cast<int>(order.size()) < p) {
      int pick = -1, pick_links = -1;
      for (int v = 0; v < p; ++v) {
        if (placed[v]) continue;
        int links = 0;
        for (int u : pattern.neighbors(v))
          if (placed[u]) ++links;
        if (links > pick_links ||
            (links == pick_links && pattern.degree(v) > pattern.degree(pick)))
          pick = v, pick_links = links;
      }
      order.push_back(pick);
      placed[pick] = 1;
    }
  }

  std::vector<int> image(p, -1);
  std::vector<char> used(n, 0);
  auto dfs = [&](auto&& self, int depth) -> bool {
    if (depth == p) return true;
    int pu = order[depth];
    // anchor candidates to the host neighborhood of a placed neighbor
    const std::vector<int>* source = nullptr;
    for (int j = 0; j < depth; ++j)
      if (pattern.adjacent(pu, order[j])) {
        source = &host.neighbors(image[order[j]]);
        break;
      }
    std::vector<int> everything;
    if (!source) {
      everything.resize(n);
      for (int v = 0; v < n; ++v) everything[v] = v;
      source = &everything;
    }
    for (int cand : *source) {
      if (used[cand] || host.degree(cand) < pattern.degree(pu)) continue;
      bool ok = true;
      for (int j = 0; j < depth && ok; ++j)
        if (pattern.adjacent(pu, order[j]) != host.adjacent(cand, image[order[j]]))
          ok = false;
      if (!ok) continue;
      image[pu] = cand;
      used[cand] = 1;
      if (self(self, depth + 1)) return true;
      used[cand] = 0;
      image[pu] = -1;
    }
    return false;
  };
  return dfs(dfs, 0);
}

K4eScanReport verify_k4e_not_bell(int max_n) {
  if (max_n < 1 || max_n > 6)
    throw std::invalid_argument("scan supports 1 <= max_n <= 6");
  const Graph diamond(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}});
  K4eScanReport report;
  report.max_n = max_n;
  // B_k respects isomorphism, so class representatives cover all graphs.
  for (int n = 1; n <= max_n; ++n)
    for (const Graph& g : graph_isomorphism_classes(n))
      for (int k = 1; k <= n + 1; ++k) {
        Graph s = build_bell(g, k).to_simple();
        ++report.bell_graphs_checked;
        if (s.order() == 4)
          report.four_vertex_cases.emplace_back(write_graph6(g), k);
        if (is_isomorphic(s, diamond))
          throw CounterexampleFound("B_" + std::to_string(k) + "(" +
                                    write_graph6(g) + ") is the diamond");
      }
  return report;
}

}  // namespace bell
