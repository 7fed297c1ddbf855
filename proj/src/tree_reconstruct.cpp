#include "bell/tree_reconstruct.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "bell/bell_graph.hpp"
#include "bell/canonical.hpp"
#include "bell/enumerate.hpp"

namespace bell {

namespace {

// The exponent p with 2^p == order, or -1.
int exact_log2(int order) {
  if (order < 1 || (order & (order - 1)) != 0) return -1;
  int p = 0;
  while ((1 << p) < order) ++p;
  return p;
}

}  // namespace

TreeClass classify_tree_type(const Graph& b) {
  int p = exact_log2(b.order());
  if (p < 0)
    throw NotPowerOfTwoOrder("a tree's 3-budget Bell graph has 2^(n-2) "
                             "vertices; got order " +
                             std::to_string(b.order()));
  TreeClass cls;
  cls.n = p + 2;
  std::vector<int> deg = b.degree_sequence();  // descending
  const int d1 = deg.front();
  const int d2 = deg.size() > 1 ? deg[1] : d1;
  const int dmin = deg.back();
  if (d1 == dmin)
    cls.shape = TreeShape::STAR;
  else if (d1 == d2)
    cls.shape = TreeShape::DOUBLE_BROOM;
  else
    cls.shape = TreeShape::GENERIC;
  return cls;
}

std::pair<int, int> solve_double_broom(long long edge_count, int n) {
  for (int b = 0; n - 3 - b >= b; ++b) {
    const int a = n - 3 - b;
    const long long count =
        (2LL * (a + b) + 1) * (1LL << (a + b - 1)) + (1LL << a) + (1LL << b) -
        1;
    if (count == edge_count) return {a, b};
  }
  throw NoBroomSolution("no legs a >= b >= 0 with a + b = " +
                        std::to_string(n - 3) + " give " +
                        std::to_string(edge_count) + " edges");
}

Graph generic_adjacency(const Graph& b, int z) {
  const std::vector<int>& hub = b.neighbors(z);
  const int n = static_cast<int>(hub.size());
  EdgeList es;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const auto& nu = b.neighbors(hub[i]);
      const auto& nv = b.neighbors(hub[j]);
      bool common = false;
      std::size_t x = 0, y = 0;
      while (x < nu.size() && y < nv.size()) {
        if (nu[x] < nv[y])
          ++x;
        else if (nu[x] > nv[y])
          ++y;
        else {
          if (nu[x] != z) {
            common = true;
            break;
          }
          ++x;
          ++y;
        }
      }
      if (!common) es.emplace_back(i, j);
    }
  Graph t(n, std::move(es));
  if (!is_tree(t))
    throw NotATreeResult("hub neighborhood adjacency is not a tree");
  return t;
}

TreeReconstruction reconstruct_tree(const Graph& b, bool verify) {
  int p = exact_log2(b.order());
  if (p < 0)
    throw NotPowerOfTwoOrder("a tree's 3-budget Bell graph has 2^(n-2) "
                             "vertices; got order " +
                             std::to_string(b.order()));
  TreeReconstruction res;
  res.n = p + 2;

  if (res.n <= 5) {
    CanonicalForm want = canonical_form(b);
    for (const Graph& t : free_trees(res.n))
      if (canonical_form(build_bell(t, 3).to_simple()) == want) {
        res.tree = t;
        res.method = "brute_force";
        return res;
      }
    throw NotABellTreeGraph("no tree of order " + std::to_string(res.n) +
                            " has this Bell graph");
  }

  TreeClass cls = classify_tree_type(b);
  switch (cls.shape) {
    case TreeShape::STAR: {
      if (b.degree_sequence().front() != res.n - 1)
        throw NotABellTreeGraph("regular input is not (n-1)-regular");
      res.tree = star_graph(res.n - 1);
      res.method = "star";
      break;
    }
    case TreeShape::DOUBLE_BROOM: {
      auto [a, bb] = solve_double_broom(b.edge_count(), res.n);
      res.tree = double_broom(a, bb);
      res.method = "double_broom";
      res.a = a;
      res.b = bb;
      break;
    }
    case TreeShape::GENERIC: {
      std::vector<int> deg = b.degree_sequence();
      if (deg.front() != res.n)
        throw NotABellTreeGraph("generic input needs a vertex of degree n");
      int z = -1;
      for (int v = 0; v < b.order(); ++v)
        if (b.degree(v) == res.n) {
          if (z != -1)
            throw NotABellTreeGraph("generic input has several hub vertices");
          z = v;
        }
      res.tree = generic_adjacency(b, z);
      res.method = "generic";
      res.z = z;
      break;
    }
  }
  if (verify &&
      !is_isomorphic(build_bell(res.tree, 3).to_simple(), b))
    throw NotABellTreeGraph("candidate " + res.method +
                            " tree fails Bell graph verification");
  return res;
}

}  // namespace bell
