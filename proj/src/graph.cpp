#include "caydeg/graph.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <queue>
#include <sstream>

namespace caydeg {

Graph Graph::empty(int n, bool directed, std::string label) {
  require(n >= 1, "graph needs at least one vertex");
  require(n <= kGroupOrderCap, "graph order " + std::to_string(n) + " exceeds cap");
  Graph g;
  g.n = n;
  g.directed = directed;
  g.label = std::move(label);
  g.words_per_row = (n + 63) / 64;
  g.bits.assign(static_cast<size_t>(n) * g.words_per_row, 0);
  return g;
}

void Graph::add_arc(int u, int v) {
  require(u >= 0 && u < n && v >= 0 && v < n, "vertex out of range");
  require(u != v, "loops are not supported");
  bits[static_cast<size_t>(u) * words_per_row + (v >> 6)] |= uint64_t{1} << (v & 63);
}

void Graph::add_edge(int u, int v) {
  add_arc(u, v);
  add_arc(v, u);
}

std::vector<int> Graph::out_neighbors(int u) const {
  std::vector<int> out;
  const uint64_t* row = &bits[static_cast<size_t>(u) * words_per_row];
  for (int w = 0; w < words_per_row; ++w) {
    uint64_t word = row[w];
    while (word) {
      int b = std::countr_zero(word);
      out.push_back(w * 64 + b);
      word &= word - 1;
    }
  }
  return out;
}

std::vector<int> Graph::in_neighbors(int u) const {
  std::vector<int> in;
  for (int v = 0; v < n; ++v)
    if (has(v, u)) in.push_back(v);
  return in;
}

int Graph::out_degree(int u) const {
  int d = 0;
  const uint64_t* row = &bits[static_cast<size_t>(u) * words_per_row];
  for (int w = 0; w < words_per_row; ++w) d += std::popcount(row[w]);
  return d;
}

long Graph::arc_count() const {
  long total = 0;
  for (int u = 0; u < n; ++u) total += out_degree(u);
  return total;
}

long Graph::edge_count() const {
  require(!directed, "edge_count is for undirected graphs");
  return arc_count() / 2;
}

int Graph::max_degree() const {
  int best = 0;
  for (int u = 0; u < n; ++u) best = std::max(best, out_degree(u));
  return best;
}

bool Graph::is_regular(int* degree) const {
  int d = out_degree(0);
  for (int u = 1; u < n; ++u)
    if (out_degree(u) != d) return false;
  if (degree) *degree = d;
  return true;
}

bool Graph::is_symmetric() const {
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (has(u, v) != has(v, u)) return false;
  return true;
}

Graph build_cayley(const FiniteGroup& G, const std::vector<int>& S) {
  require(!S.empty(), "connection set is empty");
  require(std::is_sorted(S.begin(), S.end()), "connection set must be sorted");
  bool inverse_closed = true;
  for (int s : S) {
    require(s > 0 && s < G.n, "connection set element out of range");
    if (!std::binary_search(S.begin(), S.end(), G.inv(s))) inverse_closed = false;
  }
  Graph g = Graph::empty(G.n, !inverse_closed,
                         "Cay(" + G.spec + ", {" + set_to_words(G, S) + "})");
  for (int v = 0; v < G.n; ++v)
    for (int s : S) g.add_arc(v, G.mul(s, v));
  check_internal(is_connected(g) == generates(G, S),
                 "Cayley connectivity must match <S> = G");
  return g;
}

namespace {

// Vertices reachable from 0 along arcs (forward) or against them (backward).
int reach_count(const Graph& g, bool forward) {
  std::vector<char> seen(g.n, 0);
  std::queue<int> q;
  seen[0] = 1;
  q.push(0);
  int count = 1;
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    auto step = forward ? g.out_neighbors(u) : g.in_neighbors(u);
    for (int v : step)
      if (!seen[v]) {
        seen[v] = 1;
        ++count;
        q.push(v);
      }
  }
  return count;
}

} // namespace

bool is_connected(const Graph& g) {
  if (reach_count(g, true) != g.n) return false;
  return !g.directed || reach_count(g, false) == g.n;
}

bool is_bipartite(const Graph& g) {
  require(!g.directed, "bipartiteness is checked on undirected graphs");
  std::vector<int> color(g.n, -1);
  for (int start = 0; start < g.n; ++start) {
    if (color[start] != -1) continue;
    color[start] = 0;
    std::queue<int> q;
    q.push(start);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int v : g.out_neighbors(u)) {
        if (color[v] == -1) {
          color[v] = 1 - color[u];
          q.push(v);
        } else if (color[v] == color[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

Graph path_graph(int n) {
  Graph g = Graph::empty(n, false, "P" + std::to_string(n));
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph cycle_graph(int n) {
  require(n >= 3, "cycles need at least 3 vertices");
  Graph g = Graph::empty(n, false, "C" + std::to_string(n));
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Graph complete_graph(int n) {
  Graph g = Graph::empty(n, false, "K" + std::to_string(n));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

Graph complete_bipartite(int a, int b) {
  require(a >= 1 && b >= 1, "complete bipartite parts must be nonempty");
  Graph g = Graph::empty(a + b, false,
                         "K{" + std::to_string(a) + "," + std::to_string(b) + "}");
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) g.add_edge(i, a + j);
  return g;
}

namespace {

bool is_perfect_square(long v) {
  if (v < 0) return false;
  long r = static_cast<long>(std::sqrt(static_cast<double>(v)));
  for (long c = std::max(0L, r - 2); c <= r + 2; ++c)
    if (c * c == v) return true;
  return false;
}

} // namespace

Graph make_2_integral_graph(int n) {
  require(n >= 3, "no graph on fewer than 3 vertices has degree-2 splitting field");
  if (n == 3) return path_graph(3); // spectrum 0, +-sqrt(2)
  if (n == 4) return path_graph(4); // spectrum (+-1 +- sqrt(5))/2
  if (n % 2 == 0) {
    // K_{m-2, m+2}: the part product m^2 - 4 sits strictly between (m-1)^2
    // and m^2 once m >= 3, so it is never a perfect square.
    int m = n / 2;
    return complete_bipartite(m - 2, m + 2);
  }
  for (int a = 1; 2 * a <= n; ++a)
    if (!is_perfect_square(static_cast<long>(a) * (n - a)))
      return complete_bipartite(a, n - a);
  fail(errc::internal, "no nonsquare bipartition found"); // unreachable: a=2 works for odd n
}

std::string product_kind_name(ProductKind k) {
  switch (k) {
    case ProductKind::cartesian: return "cartesian";
    case ProductKind::tensor: return "tensor";
    case ProductKind::strong: return "strong";
    case ProductKind::lexicographic: return "lexicographic";
  }
  fail(errc::internal, "bad product kind");
}

Graph graph_product(const Graph& a, const Graph& b, ProductKind kind) {
  require(!a.directed && !b.directed, "graph products are for undirected graphs");
  long nn = static_cast<long>(a.n) * b.n;
  require(nn <= kGroupOrderCap, "product order exceeds cap");
  Graph g = Graph::empty(static_cast<int>(nn), false,
                         product_kind_name(kind) + "(" + a.label + ", " + b.label + ")");
  for (int u1 = 0; u1 < a.n; ++u1)
    for (int v1 = 0; v1 < b.n; ++v1)
      for (int u2 = 0; u2 < a.n; ++u2)
        for (int v2 = 0; v2 < b.n; ++v2) {
          if (u1 == u2 && v1 == v2) continue;
          bool au = a.has(u1, u2), bv = b.has(v1, v2);
          bool adj = false;
          switch (kind) {
            case ProductKind::cartesian: adj = (u1 == u2 && bv) || (au && v1 == v2); break;
            case ProductKind::tensor: adj = au && bv; break;
            case ProductKind::strong:
              adj = (u1 == u2 && bv) || (au && v1 == v2) || (au && bv);
              break;
            case ProductKind::lexicographic: adj = au || (u1 == u2 && bv); break;
          }
          if (adj) g.add_arc(u1 * b.n + v1, u2 * b.n + v2);
        }
  check_internal(g.is_symmetric(), "product of undirected graphs is undirected");
  return g;
}

std::string to_dot(const Graph& g) {
  std::ostringstream out;
  out << (g.directed ? "digraph" : "graph") << " G {\n";
  if (!g.label.empty()) out << "  label=\"" << g.label << "\";\n";
  for (int u = 0; u < g.n; ++u)
    for (int v : g.out_neighbors(u)) {
      if (!g.directed && v < u) continue;
      out << "  " << u << (g.directed ? " -> " : " -- ") << v << ";\n";
    }
  out << "}\n";
  return out.str();
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  for (int u = 0; u < g.n; ++u)
    for (int v : g.out_neighbors(u)) {
      if (!g.directed && v < u) continue;
      out << u << ' ' << v << '\n';
    }
  return out.str();
}

} // namespace caydeg
