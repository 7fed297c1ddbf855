#include "bell/enumerate.hpp"

#include <map>
#include <stdexcept>

#include "bell/canonical.hpp"

namespace bell {

namespace {

// Pair indexing shared by the mask-based enumerators: bit b corresponds to
// the b-th pair (i, j), i < j, in lexicographic order.
std::vector<Edge> vertex_pairs(int n) {
  std::vector<Edge> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  return pairs;
}

Graph graph_from_mask(int n, const std::vector<Edge>& pairs, unsigned mask) {
  EdgeList es;
  for (size_t b = 0; b < pairs.size(); ++b)
    if (mask >> b & 1u) es.push_back(pairs[b]);
  return Graph(n, std::move(es));
}

}  // namespace

std::vector<Graph> all_labeled_graphs(int n) {
  if (n < 1 || n > 6)
    throw std::invalid_argument("labeled enumeration supports 1 <= n <= 6");
  auto pairs = vertex_pairs(n);
  std::vector<Graph> out;
  out.reserve(1u << pairs.size());
  for (unsigned mask = 0; mask < (1u << pairs.size()); ++mask)
    out.push_back(graph_from_mask(n, pairs, mask));
  return out;
}

std::vector<Graph> graph_isomorphism_classes(int n) {
  if (n < 1 || n > 6)
    throw std::invalid_argument("class enumeration supports 1 <= n <= 6");
  auto pairs = vertex_pairs(n);
  std::map<CanonicalForm, Graph> classes;
  for (unsigned mask = 0; mask < (1u << pairs.size()); ++mask) {
    Graph g = graph_from_mask(n, pairs, mask);
    classes.try_emplace(canonical_form(g), std::move(g));
  }
  std::vector<Graph> out;
  out.reserve(classes.size());
  for (auto& [form, g] : classes) out.push_back(std::move(g));
  return out;
}

std::vector<Graph> triangle_free_classes(int n) {
  if (n < 1 || n > 7)
    throw std::invalid_argument(
        "triangle-free enumeration supports 1 <= n <= 7");
  auto pairs = vertex_pairs(n);
  std::vector<int> pair_bit(n * n, -1);
  for (size_t b = 0; b < pairs.size(); ++b) {
    auto [i, j] = pairs[b];
    pair_bit[i * n + j] = static_cast<int>(b);
  }
  // Edge masks of all vertex triples; a graph is triangle-free iff its mask
  // fully contains none of them.
  std::vector<unsigned> triangles;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int l = j + 1; l < n; ++l)
        triangles.push_back((1u << pair_bit[i * n + j]) |
                            (1u << pair_bit[i * n + l]) |
                            (1u << pair_bit[j * n + l]));

  std::map<CanonicalForm, Graph> classes;
  for (unsigned mask = 0; mask < (1u << pairs.size()); ++mask) {
    bool has_triangle = false;
    for (unsigned t : triangles)
      if ((mask & t) == t) {
        has_triangle = true;
        break;
      }
    if (has_triangle) continue;
    Graph g = graph_from_mask(n, pairs, mask);
    classes.try_emplace(canonical_form(g), std::move(g));
  }
  std::vector<Graph> out;
  out.reserve(classes.size());
  for (auto& [form, g] : classes) out.push_back(std::move(g));
  return out;
}

std::vector<Graph> free_trees(int n) {
  if (n < 1) throw std::invalid_argument("tree enumeration needs n >= 1");
  std::vector<Graph> trees{Graph(1, {})};
  for (int m = 2; m <= n; ++m) {
    std::map<CanonicalForm, Graph> classes;
    for (const Graph& t : trees)
      for (int v = 0; v < t.order(); ++v) {
        EdgeList es = t.edges();
        es.emplace_back(v, m - 1);
        Graph grown(m, std::move(es));
        classes.try_emplace(canonical_form(grown), std::move(grown));
      }
    trees.clear();
    trees.reserve(classes.size());
    for (auto& [form, g] : classes) trees.push_back(std::move(g));
  }
  return trees;
}

}  // namespace bell
