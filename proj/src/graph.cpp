#include "bell/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace bell {

Graph::Graph(int order) : n_(order) {
  if (order < 0) throw std::invalid_argument("graph order must be >= 0");
  adj_.resize(n_);
}

Graph::Graph(int order, EdgeList edges) : Graph(order) {
  for (auto& [u, v] : edges) {
    if (u < 0 || u >= n_ || v < 0 || v >= n_)
      throw IndexOutOfRange("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("self-loops are not allowed");
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges_ = std::move(edges);
  for (auto [u, v] : edges_) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_) throw IndexOutOfRange("vertex id out of range");
}

const std::vector<int>& Graph::neighbors(int v) const {
  check_vertex(v);
  return adj_[v];
}

int Graph::degree(int v) const {
  check_vertex(v);
  return static_cast<int>(adj_[v].size());
}

bool Graph::adjacent(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  if (u == v) return false;
  const auto& nb = adj_[u];
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<int> Graph::degree_sequence() const {
  std::vector<int> ds(n_);
  for (int v = 0; v < n_; ++v) ds[v] = static_cast<int>(adj_[v].size());
  std::sort(ds.rbegin(), ds.rend());
  return ds;
}

Graph Graph::permuted(const std::vector<int>& new_id) const {
  if (static_cast<int>(new_id.size()) != n_)
    throw std::invalid_argument("permutation size mismatch");
  std::vector<char> seen(n_, 0);
  for (int x : new_id) {
    if (x < 0 || x >= n_ || seen[x])
      throw std::invalid_argument("not a permutation");
    seen[x] = 1;
  }
  EdgeList es;
  es.reserve(edges_.size());
  for (auto [u, v] : edges_) es.emplace_back(new_id[u], new_id[v]);
  return Graph(n_, std::move(es));
}

Graph Graph::induced(const std::vector<int>& keep) const {
  std::vector<int> pos(n_, -1);
  for (int i = 0; i < static_cast<int>(keep.size()); ++i) {
    check_vertex(keep[i]);
    if (pos[keep[i]] != -1)
      throw std::invalid_argument("duplicate vertex in induced set");
    pos[keep[i]] = i;
  }
  EdgeList es;
  for (auto [u, v] : edges_)
    if (pos[u] != -1 && pos[v] != -1) es.emplace_back(pos[u], pos[v]);
  return Graph(static_cast<int>(keep.size()), std::move(es));
}

Graph Graph::without_vertex(int v) const {
  check_vertex(v);
  std::vector<int> keep;
  keep.reserve(n_ - 1);
  for (int u = 0; u < n_; ++u)
    if (u != v) keep.push_back(u);
  return induced(keep);
}

Multigraph::Multigraph(int order) : n_(order) {
  if (order < 0) throw std::invalid_argument("multigraph order must be >= 0");
  adj_.resize(n_);
  nbrs_.resize(n_);
}

Multigraph::Multigraph(int order, std::vector<MEdge> edges) : Multigraph(order) {
  for (auto& e : edges) {
    if (e[0] < 0 || e[0] >= n_ || e[1] < 0 || e[1] >= n_)
      throw std::invalid_argument("edge endpoint out of range");
    if (e[0] == e[1]) throw std::invalid_argument("self-loops are not allowed");
    if (e[2] < 1) throw std::invalid_argument("multiplicity must be >= 1");
    if (e[0] > e[1]) std::swap(e[0], e[1]);
  }
  std::sort(edges.begin(), edges.end());
  for (size_t i = 1; i < edges.size(); ++i)
    if (edges[i][0] == edges[i - 1][0] && edges[i][1] == edges[i - 1][1])
      throw std::invalid_argument("duplicate multigraph edge entry");
  edges_ = std::move(edges);
  for (auto [u, v, m] : edges_) {
    adj_[u].emplace_back(v, m);
    adj_[v].emplace_back(u, m);
    nbrs_[u].push_back(v);
    nbrs_[v].push_back(u);
  }
  for (auto& a : adj_) std::sort(a.begin(), a.end());
  for (auto& a : nbrs_) std::sort(a.begin(), a.end());
}

int Multigraph::multiplicity(int u, int v) const {
  if (u < 0 || u >= n_ || v < 0 || v >= n_)
    throw IndexOutOfRange("vertex id out of range");
  for (auto [w, m] : adj_[u])
    if (w == v) return m;
  return 0;
}

const std::vector<int>& Multigraph::distinct_neighbors(int v) const {
  if (v < 0 || v >= n_) throw IndexOutOfRange("vertex id out of range");
  return nbrs_[v];
}

int Multigraph::distinct_degree(int v) const {
  return static_cast<int>(distinct_neighbors(v).size());
}

Graph Multigraph::underlying_simple() const {
  EdgeList es;
  es.reserve(edges_.size());
  for (auto [u, v, m] : edges_) es.emplace_back(u, v);
  return Graph(n_, std::move(es));
}

namespace {

int g6_byte(char c) {
  int b = static_cast<unsigned char>(c);
  if (b < 63 || b > 126) throw MalformedGraph6("byte out of graph6 range");
  return b - 63;
}

}  // namespace

Graph parse_graph6(const std::string& text) {
  size_t lo = text.find_first_not_of(" \t\r\n");
  if (lo == std::string::npos) throw MalformedGraph6("empty graph6 string");
  size_t hi = text.find_last_not_of(" \t\r\n");
  std::string s = text.substr(lo, hi - lo + 1);
  const std::string header = ">>graph6<<";
  if (s.rfind(header, 0) == 0) s = s.substr(header.size());
  if (s.empty()) throw MalformedGraph6("empty graph6 string");

  size_t pos = 0;
  long long n;
  if (s[0] == '~') {
    if (s.size() >= 2 && s[1] == '~')
      throw MalformedGraph6("graph6 order beyond supported range");
    if (s.size() < 4) throw MalformedGraph6("truncated graph6 order");
    n = (static_cast<long long>(g6_byte(s[1])) << 12) |
        (g6_byte(s[2]) << 6) | g6_byte(s[3]);
    if (n < 63) throw MalformedGraph6("non-canonical long-form graph6 order");
    pos = 4;
  } else {
    n = g6_byte(s[0]);
    pos = 1;
  }

  long long nbits = n * (n - 1) / 2;
  size_t need = static_cast<size_t>((nbits + 5) / 6);
  if (s.size() - pos != need)
    throw MalformedGraph6(s.size() - pos < need ? "truncated graph6 payload"
                                                : "trailing bytes after graph6 payload");

  EdgeList es;
  long long bit = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++bit) {
      int byte = g6_byte(s[pos + bit / 6]);
      if ((byte >> (5 - bit % 6)) & 1) es.emplace_back(i, j);
    }
  // Padding bits must be zero.
  for (long long b = nbits; b < static_cast<long long>(need) * 6; ++b)
    if ((g6_byte(s[pos + b / 6]) >> (5 - b % 6)) & 1)
      throw MalformedGraph6("nonzero padding bits");
  return Graph(static_cast<int>(n), std::move(es));
}

std::string write_graph6(const Graph& g) {
  int n = g.order();
  std::string s;
  if (n <= 62) {
    s.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    s.push_back('~');
    s.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    s.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    s.push_back(static_cast<char>((n & 63) + 63));
  } else {
    throw MalformedGraph6("graph order beyond supported graph6 range");
  }
  long long nbits = static_cast<long long>(n) * (n - 1) / 2;
  std::vector<int> bytes((nbits + 5) / 6, 0);
  long long bit = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++bit)
      if (g.adjacent(i, j)) bytes[bit / 6] |= 1 << (5 - bit % 6);
  for (int b : bytes) s.push_back(static_cast<char>(b + 63));
  return s;
}

Graph complement(const Graph& g) {
  EdgeList es;
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (!g.adjacent(u, v)) es.emplace_back(u, v);
  return Graph(g.order(), std::move(es));
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  EdgeList es = g.edges();
  int off = g.order();
  for (auto [u, v] : h.edges()) es.emplace_back(u + off, v + off);
  return Graph(g.order() + h.order(), std::move(es));
}

Graph identify_vertices(const Graph& g, int u, const Graph& h, int v) {
  if (u < 0 || u >= g.order() || v < 0 || v >= h.order())
    throw IndexOutOfRange("identified vertex out of range");
  auto map_h = [&](int w) {
    if (w == v) return u;
    return w < v ? g.order() + w : g.order() + w - 1;
  };
  EdgeList es = g.edges();
  for (auto [a, b] : h.edges()) es.emplace_back(map_h(a), map_h(b));
  return Graph(g.order() + h.order() - 1, std::move(es));
}

Graph subdivide_each_edge(const Graph& g) {
  EdgeList es;
  es.reserve(2 * g.edges().size());
  int next = g.order();
  for (auto [u, v] : g.edges()) {
    es.emplace_back(u, next);
    es.emplace_back(v, next);
    ++next;
  }
  return Graph(next, std::move(es));
}

Graph line_graph(const Graph& g) {
  const auto& ge = g.edges();
  int m = static_cast<int>(ge.size());
  EdgeList es;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      auto [a, b] = ge[i];
      auto [c, d] = ge[j];
      if (a == c || a == d || b == c || b == d) es.emplace_back(i, j);
    }
  return Graph(m, std::move(es));
}

bool is_connected(const Graph& g) {
  if (g.order() <= 1) return true;
  std::vector<char> seen(g.order(), 0);
  std::queue<int> q;
  q.push(0);
  seen[0] = 1;
  int count = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int w : g.neighbors(v))
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        q.push(w);
      }
  }
  return count == g.order();
}

bool is_tree(const Graph& g) {
  return g.order() >= 1 && g.edge_count() == g.order() - 1 && is_connected(g);
}

bool is_triangle_free(const Graph& g) {
  for (auto [u, v] : g.edges()) {
    const auto& nu = g.neighbors(u);
    const auto& nv = g.neighbors(v);
    size_t i = 0, j = 0;
    while (i < nu.size() && j < nv.size()) {
      if (nu[i] == nv[j]) return false;
      if (nu[i] < nv[j])
        ++i;
      else
        ++j;
    }
  }
  return true;
}

Graph path_graph(int n) {
  if (n < 1) throw BadFamilyParams("path needs n >= 1");
  EdgeList es;
  for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
  return Graph(n, std::move(es));
}

Graph cycle_graph(int n) {
  if (n < 3) throw BadFamilyParams("cycle needs n >= 3");
  EdgeList es;
  for (int i = 0; i < n; ++i) es.emplace_back(i, (i + 1) % n);
  return Graph(n, std::move(es));
}

Graph star_graph(int m) {
  if (m < 0) throw BadFamilyParams("star needs m >= 0");
  EdgeList es;
  for (int i = 1; i <= m; ++i) es.emplace_back(0, i);
  return Graph(m + 1, std::move(es));
}

Graph complete_graph(int n) {
  if (n < 0) throw BadFamilyParams("complete graph needs n >= 0");
  EdgeList es;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) es.emplace_back(u, v);
  return Graph(n, std::move(es));
}

Graph empty_graph(int n) {
  if (n < 0) throw BadFamilyParams("empty graph needs n >= 0");
  return Graph(n);
}

Graph double_broom(int a, int b) {
  // b == 0 is allowed: B(3, a, 0) is a star with one subdivided edge.
  if (a < b || b < 0) throw BadFamilyParams("double broom needs a >= b >= 0");
  EdgeList es = {{0, 1}, {1, 2}};
  for (int i = 0; i < a; ++i) es.emplace_back(0, 3 + i);
  for (int i = 0; i < b; ++i) es.emplace_back(2, 3 + a + i);
  return Graph(a + b + 3, std::move(es));
}

Graph ear_graph(int n) {
  if (n < 4 || n % 2 != 0) throw BadFamilyParams("ear graph needs even n >= 4");
  EdgeList es;
  for (int i = 1; i <= n - 2; ++i) es.emplace_back(1 + i, 2 + i);
  es.emplace_back(0, 2);      // u v_1
  es.emplace_back(1, 2);      // w v_1
  es.emplace_back(0, n);      // u v_{n-1}
  es.emplace_back(1, n);      // w v_{n-1}
  return Graph(n + 1, std::move(es));
}

Graph make_family(const std::string& name, const std::vector<int>& params) {
  auto want = [&](size_t k) {
    if (params.size() != k)
      throw BadFamilyParams("family '" + name + "' takes " + std::to_string(k) +
                            " parameter(s)");
  };
  if (name == "path") {
    want(1);
    return path_graph(params[0]);
  }
  if (name == "cycle") {
    want(1);
    return cycle_graph(params[0]);
  }
  if (name == "star") {
    want(1);
    return star_graph(params[0]);
  }
  if (name == "complete") {
    want(1);
    return complete_graph(params[0]);
  }
  if (name == "empty") {
    want(1);
    return empty_graph(params[0]);
  }
  if (name == "double_broom") {
    want(2);
    return double_broom(params[0], params[1]);
  }
  if (name == "ear") {
    want(1);
    return ear_graph(params[0]);
  }
  throw BadFamilyParams("unknown family '" + name + "'");
}

}  // namespace bell
