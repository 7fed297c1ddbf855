#include "bell/canonical.hpp"

#include <algorithm>
#include <optional>
#include <utility>

// Canonical labeling by iterative degree refinement plus full backtracking
// over every refined cell, for graphs and small-multiplicity multigraphs.
// The certificate is the minimum relabeled edge list over all leaves of the
// individualization tree; taking the minimum over the complete tree makes
// the form exact (no hashing, no invariant shortcuts).

namespace bell {

namespace {

struct AdjView {
  int n = 0;
  // (neighbor, mult), sorted by neighbor id.
  std::vector<std::vector<std::pair<int, int>>> adj;
};

using Cells = std::vector<std::vector<int>>;

// Splits cells by the multiset of (neighbor cell, multiplicity) until stable.
// Subcell order depends only on signature content, so the refinement is
// isomorphism-invariant.
void refine(const AdjView& g, Cells& cells) {
  std::vector<int> cell_of(g.n, 0);
  auto rebuild = [&] {
    for (int c = 0; c < static_cast<int>(cells.size()); ++c)
      for (int v : cells[c]) cell_of[v] = c;
  };
  rebuild();
  bool changed = true;
  while (changed) {
    changed = false;
    Cells next;
    next.reserve(cells.size());
    for (const auto& cell : cells) {
      if (cell.size() == 1) {
        next.push_back(cell);
        continue;
      }
      using Sig = std::vector<std::pair<int, int>>;
      std::vector<std::pair<Sig, int>> tagged;
      tagged.reserve(cell.size());
      for (int v : cell) {
        Sig sig;
        sig.reserve(g.adj[v].size());
        for (auto [u, m] : g.adj[v]) sig.emplace_back(cell_of[u], m);
        std::sort(sig.begin(), sig.end());
        tagged.emplace_back(std::move(sig), v);
      }
      std::sort(tagged.begin(), tagged.end());
      size_t i = 0;
      while (i < tagged.size()) {
        size_t j = i;
        std::vector<int> group;
        while (j < tagged.size() && tagged[j].first == tagged[i].first)
          group.push_back(tagged[j++].second);
        next.push_back(std::move(group));
        i = j;
      }
    }
    if (next.size() != cells.size()) changed = true;
    cells = std::move(next);
    rebuild();
  }
}

using Cert = std::vector<std::array<int, 3>>;

void search(const AdjView& g, Cells cells, std::optional<Cert>& best) {
  refine(g, cells);
  int target = -1;
  for (int c = 0; c < static_cast<int>(cells.size()); ++c)
    if (cells[c].size() > 1) {
      target = c;
      break;
    }
  if (target < 0) {
    std::vector<int> label(g.n);
    for (int c = 0; c < static_cast<int>(cells.size()); ++c)
      label[cells[c][0]] = c;
    Cert cert;
    for (int v = 0; v < g.n; ++v)
      for (auto [u, m] : g.adj[v])
        if (v < u) {
          int a = label[v], b = label[u];
          if (a > b) std::swap(a, b);
          cert.push_back({a, b, m});
        }
    std::sort(cert.begin(), cert.end());
    if (!best || cert < *best) best = std::move(cert);
    return;
  }
  for (int v : cells[target]) {
    Cells child;
    child.reserve(cells.size() + 1);
    for (int c = 0; c < static_cast<int>(cells.size()); ++c) {
      if (c == target) {
        child.push_back({v});
        std::vector<int> rest;
        rest.reserve(cells[c].size() - 1);
        for (int u : cells[c])
          if (u != v) rest.push_back(u);
        child.push_back(std::move(rest));
      } else {
        child.push_back(cells[c]);
      }
    }
    search(g, std::move(child), best);
  }
}

CanonicalForm canonicalize(const AdjView& g) {
  CanonicalForm form;
  form.order = g.n;
  if (g.n == 0) return form;
  Cells cells;
  std::vector<int> all(g.n);
  for (int v = 0; v < g.n; ++v) all[v] = v;
  cells.push_back(std::move(all));
  std::optional<Cert> best;
  search(g, std::move(cells), best);
  form.edges = std::move(*best);
  return form;
}

AdjView view_of(const Graph& g) {
  AdjView v;
  v.n = g.order();
  v.adj.resize(v.n);
  for (int x = 0; x < v.n; ++x)
    for (int y : g.neighbors(x)) v.adj[x].emplace_back(y, 1);
  return v;
}

AdjView view_of(const Multigraph& g) {
  AdjView v;
  v.n = g.order();
  v.adj.resize(v.n);
  for (auto [a, b, m] : g.edges()) {
    v.adj[a].emplace_back(b, m);
    v.adj[b].emplace_back(a, m);
  }
  for (auto& row : v.adj) std::sort(row.begin(), row.end());
  return v;
}

}  // namespace

CanonicalForm canonical_form(const Graph& g) { return canonicalize(view_of(g)); }

CanonicalForm canonical_form(const Multigraph& g) {
  return canonicalize(view_of(g));
}

bool is_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  if (a.degree_sequence() != b.degree_sequence()) return false;
  return canonical_form(a) == canonical_form(b);
}

bool is_multigraph_isomorphic(const Multigraph& a, const Multigraph& b) {
  if (a.order() != b.order() || a.edges().size() != b.edges().size())
    return false;
  return canonical_form(a) == canonical_form(b);
}

}  // namespace bell
