#include "bell/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <thread>
#include <utility>

#include "bell/bell_graph.hpp"
#include "bell/canonical.hpp"
#include "bell/cliques.hpp"
#include "bell/core_reconstruct.hpp"
#include "bell/enumerate.hpp"
#include "bell/graph.hpp"
#include "bell/matchings.hpp"
#include "bell/partition.hpp"
#include "bell/tree_reconstruct.hpp"

namespace bell {

namespace {

using Failures = std::vector<VerifyFailure>;

void check(Failures& fs, bool cond, const std::string& input,
           const std::string& expected, const std::string& actual) {
  if (!cond) fs.push_back({input, expected, actual});
}

std::string label(const Graph& g, int k) {
  return write_graph6(g) + " k=" + std::to_string(k);
}

// Runs fn(0..count-1) across suite_thread_count() workers; failures merge in
// index order, so reports are identical at any thread count. A throwing case
// is recorded as its own failure.
void run_cases(VerifySuiteReport& rep, int count,
               const std::function<Failures(int)>& fn) {
  rep.cases += count;
  if (count <= 0) return;
  std::vector<Failures> results(count);
  std::atomic<int> next{0};
  auto work = [&]() {
    for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
      try {
        results[i] = fn(i);
      } catch (const std::exception& e) {
        results[i].push_back({"case " + std::to_string(i),
                              "completes without error", e.what()});
      }
    }
  };
  const int workers = std::min(suite_thread_count(), count);
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int t = 0; t < workers; ++t) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  for (auto& r : results)
    rep.failures.insert(rep.failures.end(), r.begin(), r.end());
}

Graph complete_minus_edge(int n) {
  EdgeList es;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!(i == 0 && j == 1)) es.emplace_back(i, j);
  return Graph(n, std::move(es));
}

// Every clique of g with at least min_size vertices, ids ascending.
void all_cliques_rec(const Graph& g, std::vector<int>& cur, int from,
                     int min_size, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) >= min_size) out.push_back(cur);
  for (int v = from; v < g.order(); ++v) {
    bool fits = true;
    for (int x : cur)
      if (!g.adjacent(x, v)) {
        fits = false;
        break;
      }
    if (!fits) continue;
    cur.push_back(v);
    all_cliques_rec(g, cur, v + 1, min_size, out);
    cur.pop_back();
  }
}

std::vector<std::vector<int>> all_cliques(const Graph& g, int min_size) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  all_cliques_rec(g, cur, 0, min_size, out);
  return out;
}

// ---- clique family oracle: direct evaluation of the definitions ----

std::vector<int> oracle_witnesses(const BellGraph& b, int u, int v) {
  std::vector<int> ws;
  for (int x = 0; x < b.base().order(); ++x)
    if (restrict(b.vertex(u), x) == restrict(b.vertex(v), x)) ws.push_back(x);
  return ws;
}

// The witness singletons of a triangle, as realizers r[i] of the edge
// opposite ids[i]; empty means some edge has a non-singleton witness set.
std::vector<int> triangle_realizers(const BellGraph& b,
                                    const std::vector<int>& ids) {
  std::vector<int> r(3, -1);
  const int opp[3][2] = {{1, 2}, {0, 2}, {0, 1}};
  for (int i = 0; i < 3; ++i) {
    std::vector<int> ws = oracle_witnesses(b, ids[opp[i][0]], ids[opp[i][1]]);
    if (ws.size() != 1) return {};
    r[i] = ws.front();
  }
  return r;
}

// Common witnesses of all clique edges, by brute force over every base
// vertex as a candidate anchor.
std::vector<int> oracle_anchors(const BellGraph& b,
                                const std::vector<int>& ids) {
  std::vector<int> anchors;
  for (int a = 0; a < b.base().order(); ++a) {
    bool all = true;
    for (std::size_t i = 0; i < ids.size() && all; ++i)
      for (std::size_t j = i + 1; j < ids.size() && all; ++j) {
        std::vector<int> ws = oracle_witnesses(b, ids[i], ids[j]);
        all = std::find(ws.begin(), ws.end(), a) != ws.end();
      }
    if (all) anchors.push_back(a);
  }
  return anchors;
}

// Disagreement between classify_clique's answer and the definition-level
// reading of the clique, or nullopt.
std::optional<std::string> oracle_mismatch(const BellGraph& b,
                                           const std::vector<int>& ids,
                                           const CliqueClass& got) {
  const int m = static_cast<int>(ids.size());

  std::vector<std::pair<int, int>> doubled;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      std::vector<int> ws = oracle_witnesses(b, ids[i], ids[j]);
      if (ws.empty()) return "clique pair has no witness";
      if (ws.size() > 2) return "witness set larger than two";
      if (ws.size() == 2) doubled.emplace_back(ids[i], ids[j]);
    }
  if (doubled != got.doubled_edges) return "doubled edge lists differ";

  std::vector<int> anchors = oracle_anchors(b, ids);
  if (!anchors.empty() || m <= 2) {
    if (m <= 2 && anchors.empty()) return "edge without a common witness";
    if (got.family != CliqueFamily::S_CLIQUE)
      return std::string("common witness exists but family is ") +
             family_name(got.family);
    if (m >= 3 && anchors.size() != 1)
      return "anchor is not unique on a clique of size >= 3";
    if (!got.anchor ||
        std::find(anchors.begin(), anchors.end(), *got.anchor) ==
            anchors.end())
      return "reported anchor is not a common witness";
    return std::nullopt;
  }

  if (m == 3) {
    std::vector<int> r = triangle_realizers(b, ids);
    if (r.empty()) return "T-triangle edge with a non-singleton witness set";
    std::vector<int> rs = r;
    std::sort(rs.begin(), rs.end());
    if (rs[0] == rs[1] || rs[1] == rs[2]) return "realizers are not distinct";
    if (got.realizers != rs) return "realizer sets differ";
    bool cyclic = true;
    for (int i = 0; i < 3; ++i)
      if (!b.vertex(ids[i]).has_singleton(r[i])) cyclic = false;
    int hubs = 0, hub_id = -1;
    for (int i = 0; i < 3; ++i)
      if (b.vertex(ids[i]).has_part(rs)) {
        ++hubs;
        hub_id = ids[i];
      }
    if (cyclic) {
      if (got.family != CliqueFamily::CYCLIC_T)
        return std::string("cyclic by definition, classified ") +
               family_name(got.family);
      if (got.hub) return "cyclic triangle reported with a hub";
      return std::nullopt;
    }
    if (hubs == 1) {
      if (got.family != CliqueFamily::RADIAL_T)
        return std::string("radial by definition, classified ") +
               family_name(got.family);
      if (!got.hub || *got.hub != hub_id) return "radial hub differs";
      return std::nullopt;
    }
    return "triangle fits no family definition";
  }

  if (m == 4) {
    int t_faces = 0, outside = -1;
    std::vector<int> face_rs;
    for (int skip = 0; skip < 4; ++skip) {
      std::vector<int> face;
      for (int i = 0; i < 4; ++i)
        if (i != skip) face.push_back(ids[i]);
      if (oracle_anchors(b, face).empty()) {
        ++t_faces;
        outside = skip;
        std::vector<int> r = triangle_realizers(b, face);
        if (r.empty()) return "T-face edge with a non-singleton witness set";
        std::sort(r.begin(), r.end());
        if (!face_rs.empty() && face_rs != r)
          return "T-faces disagree on realizers";
        face_rs = r;
      }
    }
    if (t_faces == 1) {
      if (got.family != CliqueFamily::SPLIT_TETRA)
        return std::string("one T-face, classified ") +
               family_name(got.family);
      if (got.realizers != face_rs) return "realizer sets differ";
      if (!got.hub || *got.hub != ids[outside])
        return "split hub is not the vertex outside the T-face";
      return std::nullopt;
    }
    if (t_faces == 4) {
      if (got.family != CliqueFamily::FUSED_TETRA)
        return std::string("four T-faces, classified ") +
               family_name(got.family);
      if (got.realizers != face_rs) return "realizer sets differ";
      int hubs = 0, hub_id = -1;
      for (int id : ids)
        if (b.vertex(id).has_part(face_rs)) {
          ++hubs;
          hub_id = id;
        }
      if (hubs != 1) return "fused tetrahedron without a unique triple part";
      if (!got.hub || *got.hub != hub_id) return "fused hub differs";
      return std::nullopt;
    }
    return "tetrahedron with " + std::to_string(t_faces) + " T-faces";
  }

  return "clique of size >= 5 without a common witness";
}

// ---- suites ----

VerifySuiteReport suite_figures(int) {
  VerifySuiteReport rep;
  rep.suite = "figures";
  struct SimpleCase {
    std::string name;
    Graph base;
    int k;
    Graph want;
  };
  const std::vector<SimpleCase> simple = {
      {"B_3(P_4)", path_graph(4), 3, cycle_graph(4)},
      {"B_3(K_{1,3})", star_graph(3), 3, complete_graph(4)},
      {"B_4(K_3+K_1)", disjoint_union(complete_graph(3), complete_graph(1)),
       4, complete_graph(4)},
      {"B_3(empty_3)", empty_graph(3), 3, complete_minus_edge(5)},
  };
  run_cases(rep, static_cast<int>(simple.size()) + 2, [&](int i) {
    Failures fs;
    if (i < static_cast<int>(simple.size())) {
      const SimpleCase& c = simple[i];
      Graph got = build_bell(c.base, c.k).to_simple();
      check(fs, is_isomorphic(got, c.want), c.name,
            "isomorphic to the figure fixture",
            write_graph6(got) + " differs from " + write_graph6(c.want));
      return fs;
    }
    Multigraph star3 = build_bell(star_graph(3), 3).to_multigraph();
    if (i == static_cast<int>(simple.size())) {
      Multigraph tri4 =
          build_bell(disjoint_union(complete_graph(3), complete_graph(1)), 4)
              .to_multigraph();
      check(fs, !is_multigraph_isomorphic(star3, tri4),
            "multigraphs of B_3(K_{1,3}) and B_4(K_3+K_1)",
            "not isomorphic (doubled edges differ)", "isomorphic");
    } else {
      Multigraph pairs3 = build_bell(empty_graph(3), 2).to_multigraph();
      check(fs, is_multigraph_isomorphic(star3, pairs3),
            "multigraphs of B_3(K_{1,3}) and B_2(empty_3)", "isomorphic",
            "not isomorphic");
    }
    return fs;
  });
  return rep;
}

VerifySuiteReport suite_cliques(int max_n) {
  VerifySuiteReport rep;
  rep.suite = "cliques";
  if (max_n < 0) max_n = 5;
  max_n = std::min(max_n, 6);

  rep.cases += 1;
  {
    CliqueCensus c = clique_census(build_bell(empty_graph(3), 3));
    bool good = c.s_triangles == 3 && c.radial_triangles == 3 &&
                c.cyclic_triangles == 1 && c.split_tetrahedra == 1 &&
                c.fused_tetrahedra == 1 && c.s_tetrahedra == 0 &&
                c.larger_s_cliques == 0;
    check(rep.failures, good, "census of B_3(empty_3)",
          "3 S / 3 radial / 1 cyclic triangles, 1 split / 1 fused tetrahedra",
          census_to_json(c).dump());
  }

  std::vector<std::pair<Graph, int>> instances;
  for (int n = 1; n <= max_n; ++n)
    for (const Graph& g : graph_isomorphism_classes(n))
      for (int k = 1; k <= 5; ++k) instances.emplace_back(g, k);

  run_cases(rep, static_cast<int>(instances.size()), [&](int i) {
    Failures fs;
    const auto& [g, k] = instances[i];
    BellGraph b = build_bell(g, k);
    Graph s = b.to_simple();
    CliqueCensus tally;
    for (const std::vector<int>& ids : all_cliques(s, 2)) {
      CliqueClass got = classify_clique(b, ids);
      if (auto why = oracle_mismatch(b, ids, got))
        check(fs, false, label(g, k) + " clique size " +
              std::to_string(ids.size()),
              "classification matching the definition oracle", *why);
      if (ids.size() == 3) {
        if (got.family == CliqueFamily::S_CLIQUE) ++tally.s_triangles;
        if (got.family == CliqueFamily::CYCLIC_T) ++tally.cyclic_triangles;
        if (got.family == CliqueFamily::RADIAL_T) ++tally.radial_triangles;
      } else if (ids.size() == 4) {
        if (got.family == CliqueFamily::S_CLIQUE) ++tally.s_tetrahedra;
        if (got.family == CliqueFamily::SPLIT_TETRA) ++tally.split_tetrahedra;
        if (got.family == CliqueFamily::FUSED_TETRA) ++tally.fused_tetrahedra;
      } else if (ids.size() >= 5) {
        ++tally.larger_s_cliques;
      }
    }
    CliqueCensus census = clique_census(b);
    check(fs,
          census_to_json(census).dump() == census_to_json(tally).dump(),
          label(g, k), "census equals the per-clique recount",
          census_to_json(census).dump() + " vs " +
              census_to_json(tally).dump());
    return fs;
  });
  return rep;
}

VerifySuiteReport suite_forbidden(int max_n) {
  VerifySuiteReport rep;
  rep.suite = "forbidden";
  if (max_n < 0) max_n = 5;
  max_n = std::min(max_n, 6);
  const Graph diamond(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}});
  const Graph k6e = complete_minus_edge(6);

  std::vector<std::pair<Graph, int>> instances;
  for (int n = 1; n <= max_n; ++n)
    for (const Graph& g : graph_isomorphism_classes(n))
      for (int k = 1; k <= n + 1; ++k) instances.emplace_back(g, k);

  run_cases(rep, static_cast<int>(instances.size()), [&](int i) {
    Failures fs;
    const auto& [g, k] = instances[i];
    BellGraph b = build_bell(g, k);
    Graph s = b.to_simple();
    if (s.order() == 4)
      check(fs, !is_isomorphic(s, diamond), label(g, k),
            "no Bell graph is the diamond", "B_k(G) is K_4 minus an edge");
    check(fs, !contains_induced(k6e, s), label(g, k),
          "no induced K_6 minus an edge", "induced K_6 minus an edge found");
    for (const std::vector<int>& ids : all_cliques(s, 5)) {
      CliqueClass got = classify_clique(b, ids);
      check(fs, got.family == CliqueFamily::S_CLIQUE,
            label(g, k) + " clique size " + std::to_string(ids.size()),
            "every clique of size >= 5 is an S-clique",
            family_name(got.family));
    }
    return fs;
  });
  return rep;
}

Matching lift_through_deletion(const Graph& h, int v) {
  PerfectMatchingReport rep = unique_perfect_matching(h.without_vertex(v));
  EdgeList es;
  for (const auto& [a, b] : rep.matching->edges())
    es.emplace_back(a >= v ? a + 1 : a, b >= v ? b + 1 : b);
  return Matching(h.order(), es);
}

Failures join_identity_case(const Graph& h1, int v1, const Graph& h2, int v2,
                            const std::string& name) {
  Failures fs;
  Graph j = join_uniquely_unmatched(h1, v1, h2, v2);
  Graph lhs = build_matching_graph(j, (j.order() - 1) / 2).graph;
  MatchingGraph mg1 = build_matching_graph(h1, (h1.order() - 1) / 2);
  MatchingGraph mg2 = build_matching_graph(h2, (h2.order() - 1) / 2);
  Graph rhs = identify_vertices(mg1.graph, mg1.index_of(lift_through_deletion(h1, v1)),
                                mg2.graph, mg2.index_of(lift_through_deletion(h2, v2)));
  check(fs, is_isomorphic(lhs, rhs), name,
        "matching graph of the join is the glued matching graphs",
        "graphs differ");
  return fs;
}

VerifySuiteReport suite_matching(int max_n) {
  VerifySuiteReport rep;
  rep.suite = "matching";
  if (max_n < 0) max_n = 7;
  max_n = std::min(max_n, 7);

  std::vector<std::pair<Graph, int>> phi_instances;
  for (int n = 1; n <= max_n; ++n)
    for (const Graph& g : triangle_free_classes(n)) {
      int hi = (n + 1) / 2;
      if (hi - 1 >= 0) phi_instances.emplace_back(g, hi - 1);
      phi_instances.emplace_back(g, hi);
    }
  run_cases(rep, static_cast<int>(phi_instances.size()), [&](int i) {
    Failures fs;
    const auto& [g, k] = phi_instances[i];
    verify_phi_isomorphism(g, k);  // throws CounterexampleFound on mismatch
    return fs;
  });

  run_cases(rep, 6, [&](int i) {
    Failures fs;
    const int k = i + 1;
    Graph got = build_matching_graph(cycle_graph(2 * k + 1), k).graph;
    check(fs, is_isomorphic(got, cycle_graph(2 * k + 1)),
          "M_" + std::to_string(k) + "(C_" + std::to_string(2 * k + 1) + ")",
          "isomorphic to the odd cycle", write_graph6(got));
    return fs;
  });

  run_cases(rep, 5, [&](int i) {
    Failures fs;
    const int k = i + 2;
    Graph got = build_matching_graph(ear_graph(2 * k), k).graph;
    check(fs, is_isomorphic(got, cycle_graph(2 * k + 2)),
          "M_" + std::to_string(k) + "(ear graph G_" + std::to_string(2 * k) +
              ")",
          "isomorphic to C_" + std::to_string(2 * k + 2), write_graph6(got));
    return fs;
  });

  std::vector<std::pair<std::string, Graph>> agree = {
      {"C_5", cycle_graph(5)},   {"C_7", cycle_graph(7)},
      {"C_9", cycle_graph(9)},   {"G_4", ear_graph(4)},
      {"G_6", ear_graph(6)},     {"G_8", ear_graph(8)},
  };
  run_cases(rep, static_cast<int>(agree.size()), [&](int i) {
    Failures fs;
    const auto& [name, g] = agree[i];
    std::vector<Matching> ms = enumerate_matchings(g, (g.order() - 1) / 2);
    for (std::size_t a = 0; a < ms.size(); ++a)
      for (std::size_t b = a + 1; b < ms.size(); ++b) {
        NearPerfectAdjacency r = near_perfect_adjacent(g, ms[a], ms[b]);
        bool direct = matching_move_adjacent(ms[a], ms[b]);
        bool agree_all = r.delete_vertex == r.edge_swap &&
                         r.edge_swap == r.remainder &&
                         r.delete_vertex == direct &&
                         r.witness.has_value() == r.delete_vertex;
        check(fs, agree_all,
              name + " pair " + std::to_string(a) + "," + std::to_string(b),
              "all three adjacency conditions agree",
              std::string("delete_vertex=") + (r.delete_vertex ? "1" : "0") +
                  " edge_swap=" + (r.edge_swap ? "1" : "0") +
                  " remainder=" + (r.remainder ? "1" : "0") +
                  " direct=" + (direct ? "1" : "0"));
      }
    return fs;
  });

  run_cases(rep, 2, [&](int i) {
    if (i == 0)
      return join_identity_case(cycle_graph(5), 0, cycle_graph(5), 0,
                                "C_5 join C_5");
    return join_identity_case(cycle_graph(5), 0, cycle_graph(7), 0,
                              "C_5 join C_7");
  });
  return rep;
}

VerifySuiteReport suite_realize(int max_n) {
  VerifySuiteReport rep;
  rep.suite = "realize";
  const int tree_max = max_n < 0 ? 7 : std::min(max_n, 9);
  const int cycle_max = max_n < 0 ? 10 : std::min(std::max(max_n, 3), 12);

  std::vector<Graph> trees;
  for (int n = 1; n <= tree_max; ++n)
    for (const Graph& t : free_trees(n)) trees.push_back(t);
  run_cases(rep, static_cast<int>(trees.size()), [&](int i) {
    Failures fs;
    const Graph& t = trees[i];
    RealizationCertificate cert = realize_tree(t);  // validates on build
    check(fs, cert.budget == t.order(), "tree " + write_graph6(t),
          "budget equals the tree order", std::to_string(cert.budget));
    check(fs, cert.base.order() == 2 * t.order() - 1, "tree " + write_graph6(t),
          "base is the complement of the subdivision",
          std::to_string(cert.base.order()) + " vertices");
    return fs;
  });

  run_cases(rep, cycle_max - 2, [&](int i) {
    Failures fs;
    const int m = i + 3;
    RealizationCertificate cert = realize_cycle(m);
    int want_budget = m == 3 ? 3 : m == 4 ? 2 : m % 2 == 1 ? (m + 1) / 2 : m / 2;
    check(fs, cert.budget == want_budget, "cycle " + std::to_string(m),
          "budget " + std::to_string(want_budget),
          std::to_string(cert.budget));
    return fs;
  });
  return rep;
}

VerifySuiteReport suite_tree_roundtrip(int max_n) {
  VerifySuiteReport rep;
  rep.suite = "tree-roundtrip";
  if (max_n < 0) max_n = 9;
  max_n = std::min(max_n, 9);
  const std::map<int, int> tree_counts = {{3, 1},  {4, 2},  {5, 3}, {6, 6},
                                          {7, 11}, {8, 23}, {9, 47}};

  std::vector<Graph> trees;
  for (int n = 3; n <= max_n; ++n) {
    std::vector<Graph> tn = free_trees(n);
    if (auto it = tree_counts.find(n); it != tree_counts.end()) {
      rep.cases += 1;
      check(rep.failures, static_cast<int>(tn.size()) == it->second,
            "free trees of order " + std::to_string(n),
            std::to_string(it->second) + " trees",
            std::to_string(tn.size()) + " trees");
    }
    trees.insert(trees.end(), tn.begin(), tn.end());
  }

  run_cases(rep, static_cast<int>(trees.size()), [&](int i) {
    Failures fs;
    const Graph& t = trees[i];
    const int n = t.order();
    Graph b = build_bell(t, 3).to_simple();
    check(fs, b.order() == (1 << (n - 2)), "tree " + write_graph6(t),
          "2^(n-2) Bell vertices", std::to_string(b.order()));
    TreeReconstruction r = reconstruct_tree(b);
    check(fs, is_isomorphic(r.tree, t), "tree " + write_graph6(t),
          "round-trip recovers the tree",
          "got " + write_graph6(r.tree) + " via " + r.method);
    return fs;
  });

  // The edge formula needs a + b >= 2; at a + b = 1 the two cross edges
  // between the broom halves coincide and the simple count drops by one.
  std::vector<std::pair<int, int>> brooms;
  for (int a = 1; a <= 8; ++a)
    for (int b = 0; b <= a && a + b <= 8; ++b)
      if (a + b >= 2) brooms.emplace_back(a, b);
  run_cases(rep, static_cast<int>(brooms.size()), [&](int i) {
    Failures fs;
    const auto& [a, b] = brooms[i];
    const int n = a + b + 3;
    const long long want =
        (2LL * (a + b) + 1) * (1LL << (a + b - 1)) + (1LL << a) + (1LL << b) -
        1;
    Graph bg = build_bell(double_broom(a, b), 3).to_simple();
    check(fs, bg.edge_count() == want,
          "double broom a=" + std::to_string(a) + " b=" + std::to_string(b),
          std::to_string(want) + " edges", std::to_string(bg.edge_count()));
    auto [sa, sb] = solve_double_broom(bg.edge_count(), n);
    check(fs, sa == a && sb == b,
          "double broom a=" + std::to_string(a) + " b=" + std::to_string(b),
          "edge count inverts to (a,b)",
          "(" + std::to_string(sa) + "," + std::to_string(sb) + ")");
    return fs;
  });
  return rep;
}

VerifySuiteReport suite_core_roundtrip(int max_n) {
  VerifySuiteReport rep;
  rep.suite = "core-roundtrip";
  if (max_n < 0) max_n = 6;
  max_n = std::min(max_n, 6);

  std::vector<Graph> instances;
  for (int n = 1; n <= max_n; ++n)
    for (const Graph& g : graph_isomorphism_classes(n)) instances.push_back(g);

  run_cases(rep, static_cast<int>(instances.size()), [&](int i) {
    Failures fs;
    const Graph& g = instances[i];
    const int n = g.order();
    BellGraph bg = build_bell(g, n);
    Multigraph bm = bg.to_multigraph();
    Graph got = reconstruct_core(bm);
    check(fs, is_isomorphic(got, core(g)), write_graph6(g),
          "reconstructed core isomorphic to core(G)",
          write_graph6(got) + " vs " + write_graph6(core(g)));
    if (n <= 5) {
      std::vector<std::vector<int>> singles;
      for (int v = 0; v < n; ++v) singles.push_back({v});
      int qid = bg.index_of(StablePartition(n, std::move(singles)));
      check(fs,
            is_isomorphic(neighborhood_line_graph(bm, qid).graph,
                          line_graph(complement(g))),
            write_graph6(g),
            "singleton neighborhood isomorphic to L(complement)",
            "graphs differ");
      std::vector<int> d = totally_doubled(bm);
      int best = 0;
      for (int v : d) best = std::max(best, bm.distinct_degree(v));
      for (int v : d) {
        if (bm.distinct_degree(v) != best) continue;
        Graph alt = reconstruct_core_trace(bm, v).core;
        check(fs, is_isomorphic(alt, core(g)),
              write_graph6(g) + " candidate " + std::to_string(v),
              "any max-degree candidate reconstructs the same core",
              write_graph6(alt));
      }
    }
    return fs;
  });

  run_cases(rep, 3, [&](int i) {
    Failures fs;
    Graph gbar, g;
    int want_k3 = 0, want_k13 = 0;
    std::string name;
    if (i == 0) {
      gbar = disjoint_union(complete_graph(3), empty_graph(2));
      want_k3 = 1;
      name = "complement of K_3 + 2 isolated";
    } else if (i == 1) {
      gbar = disjoint_union(star_graph(3), empty_graph(1));
      want_k13 = 1;
      name = "complement of K_{1,3} + isolated";
    } else {
      gbar = disjoint_union(complete_graph(3), star_graph(3));
      want_k3 = want_k13 = 1;
      name = "complement of K_3 + K_{1,3}";
    }
    g = complement(gbar);
    CoreReconstruction trace =
        reconstruct_core_trace(build_bell(g, g.order()).to_multigraph());
    int k3 = 0, k13 = 0, plain = 0;
    for (const RootRecovery& r : trace.recoveries) {
      if (!r.resolved) {
        ++plain;
        continue;
      }
      if (*r.resolved == TriangleRoot::K3) ++k3;
      if (*r.resolved == TriangleRoot::K13) ++k13;
    }
    check(fs, k3 == want_k3 && k13 == want_k13 && plain == 0, name,
          std::to_string(want_k3) + " K_3 and " + std::to_string(want_k13) +
              " K_{1,3} resolutions",
          std::to_string(k3) + " K_3, " + std::to_string(k13) +
              " K_{1,3}, " + std::to_string(plain) + " unresolved");
    check(fs, is_isomorphic(trace.core, core(g)), name,
          "core recovered through the ambiguity",
          write_graph6(trace.core) + " vs " + write_graph6(core(g)));
    return fs;
  });
  return rep;
}

Failures witness_pattern_case(const Graph& g, int k) {
  Failures fs;
  BellGraph b = build_bell(g, k);
  for (const BellEdge& e : b.edges()) {
    check(fs, e.witnesses.size() >= 1 && e.witnesses.size() <= 2,
          label(g, k) + " edge " + std::to_string(e.u) + "," +
              std::to_string(e.v),
          "between one and two witnesses",
          std::to_string(e.witnesses.size()) + " witnesses");
    bool doubled = e.witnesses.size() == 2;
    bool pattern =
        is_double_edge_pattern(b.vertex(e.u), b.vertex(e.v)).has_value();
    check(fs, doubled == pattern,
          label(g, k) + " edge " + std::to_string(e.u) + "," +
              std::to_string(e.v),
          "doubled exactly when the pair/split pattern holds",
          std::string("doubled=") + (doubled ? "1" : "0") + " pattern=" +
              (pattern ? "1" : "0"));
  }
  return fs;
}

VerifySuiteReport suite_properties(int max_n) {
  VerifySuiteReport rep;
  rep.suite = "properties";
  const int exhaustive_max = max_n < 0 ? 4 : std::min(max_n, 6);

  std::vector<std::pair<Graph, int>> instances;
  for (int n = 1; n <= exhaustive_max; ++n)
    for (const Graph& g : graph_isomorphism_classes(n))
      for (int k = 1; k <= n + 1; ++k) instances.emplace_back(g, k);
  run_cases(rep, static_cast<int>(instances.size()), [&](int i) {
    return witness_pattern_case(instances[i].first, instances[i].second);
  });

  run_cases(rep, 30, [&](int i) {
    std::mt19937 rng(48876 + i);
    const int n = 5 + i % 3;
    EdgeList es;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() % 2 == 0) es.emplace_back(u, v);
    Graph g(n, std::move(es));
    const int k = 1 + static_cast<int>(rng() % (n + 1));
    return witness_pattern_case(g, k);
  });

  run_cases(rep, 7, [&](int i) {
    Failures fs;
    const int m = i + 2;
    Multigraph bm = build_bell(empty_graph(m), 2).to_multigraph();
    check(fs, bm.order() == (1 << (m - 1)),
          "B_2 of " + std::to_string(m) + " isolated vertices",
          std::to_string(1 << (m - 1)) + " vertices",
          std::to_string(bm.order()));
    std::vector<int> deg(bm.order(), 0);
    for (const auto& e : bm.edges()) {
      deg[e[0]] += e[2];
      deg[e[1]] += e[2];
    }
    for (int v = 0; v < bm.order(); ++v)
      if (deg[v] != m) {
        check(fs, false, "B_2 of " + std::to_string(m) + " isolated vertices",
              "multigraph degree " + std::to_string(m) + " everywhere",
              "vertex " + std::to_string(v) + " has degree " +
                  std::to_string(deg[v]));
        break;
      }
    return fs;
  });

  std::vector<Graph> universal;
  for (int n = 2; n <= 5; ++n)
    for (const Graph& g : graph_isomorphism_classes(n))
      for (int v = 0; v < n; ++v)
        if (g.degree(v) == n - 1) {
          universal.push_back(g);
          break;
        }
  run_cases(rep, static_cast<int>(universal.size()), [&](int i) {
    Failures fs;
    const Graph& g = universal[i];
    const int n = g.order();
    for (int w = 0; w < n; ++w) {
      if (g.degree(w) != n - 1) continue;
      for (int k = 1; k <= n; ++k) {
        bool same = is_multigraph_isomorphic(
            build_bell(g, k + 1).to_multigraph(),
            build_bell(g.without_vertex(w), k).to_multigraph());
        check(fs, same,
              write_graph6(g) + " universal " + std::to_string(w) + " k=" +
                  std::to_string(k),
              "B_{k+1}(G) isomorphic to B_k(G - w)", "multigraphs differ");
      }
    }
    return fs;
  });

  run_cases(rep, 10, [&](int i) {
    Failures fs;
    std::mt19937 rng(91210 + i);
    const int n = 3 + static_cast<int>(rng() % 3);
    EdgeList es;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() % 2 == 0) es.emplace_back(u, v);
    for (int u = 0; u < n; ++u) es.emplace_back(u, n);  // new universal vertex
    Graph g(n + 1, std::move(es));
    const int k = 1 + static_cast<int>(rng() % (n + 1));
    bool same = is_multigraph_isomorphic(
        build_bell(g, k + 1).to_multigraph(),
        build_bell(g.without_vertex(n), k).to_multigraph());
    check(fs, same,
          "random universal " + write_graph6(g) + " k=" + std::to_string(k),
          "B_{k+1}(G) isomorphic to B_k(G - w)", "multigraphs differ");
    return fs;
  });
  return rep;
}

}  // namespace

const std::vector<std::string>& verify_suite_names() {
  static const std::vector<std::string> names = {
      "figures",  "cliques", "forbidden",      "matching",
      "realize",  "tree-roundtrip", "core-roundtrip", "properties"};
  return names;
}

VerifySuiteReport run_verify_suite(const std::string& suite, int max_n) {
  using SuiteFn = VerifySuiteReport (*)(int);
  static const std::map<std::string, SuiteFn> table = {
      {"figures", suite_figures},
      {"cliques", suite_cliques},
      {"forbidden", suite_forbidden},
      {"matching", suite_matching},
      {"realize", suite_realize},
      {"tree-roundtrip", suite_tree_roundtrip},
      {"core-roundtrip", suite_core_roundtrip},
      {"properties", suite_properties},
  };
  auto it = table.find(suite);
  if (it == table.end())
    throw std::invalid_argument("unknown verify suite '" + suite + "'");
  auto start = std::chrono::steady_clock::now();
  VerifySuiteReport rep = it->second(max_n);
  rep.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                    std::chrono::steady_clock::now() - start)
                    .count();
  return rep;
}

nlohmann::json report_to_json(const VerifySuiteReport& r) {
  nlohmann::json fails = nlohmann::json::array();
  for (const VerifyFailure& f : r.failures)
    fails.push_back({{"input", f.input},
                     {"expected", f.expected},
                     {"actual", f.actual}});
  return {{"suite", r.suite},
          {"cases", r.cases},
          {"failures", fails},
          {"ok", r.ok()},
          {"wall_ms", r.wall_ms}};
}

int suite_thread_count() {
  if (const char* env = std::getenv("BELL_THREADS")) {
    int v = std::atoi(env);
    return v >= 1 ? v : 1;
  }
  unsigned hc = std::thread::hardware_concurrency();
  return hc > 0 ? static_cast<int>(hc) : 1;
}

}  // namespace bell
