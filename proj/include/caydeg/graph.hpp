#pragma once

// Finite simple graphs (optionally directed) with bit-matrix adjacency rows:
// the verifier builds millions of small graphs, so construction and edge
// tests stay branch-light and cache-friendly.  Vertices are 0..n-1; loops are
// not representable (connection sets exclude the identity).

#include "caydeg/group.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace caydeg {

struct Graph {
  int n = 0;
  bool directed = false;
  std::string label;
  int words_per_row = 0;
  std::vector<uint64_t> bits; // row-major adjacency bit rows

  static Graph empty(int n, bool directed = false, std::string label = "");

  bool has(int u, int v) const {
    return (bits[static_cast<size_t>(u) * words_per_row + (v >> 6)] >> (v & 63)) & 1u;
  }
  void add_arc(int u, int v);
  void add_edge(int u, int v); // arcs both ways

  std::vector<int> out_neighbors(int u) const;
  std::vector<int> in_neighbors(int u) const;
  int out_degree(int u) const;
  long arc_count() const;  // ordered adjacent pairs
  long edge_count() const; // undirected only: arc_count / 2
  int max_degree() const;  // max out-degree
  bool is_regular(int* degree = nullptr) const; // all out-degrees equal
  bool is_symmetric() const;
};

// Cayley graph Cay(G, S): arc g -> h iff h g^{-1} in S (h = s g); undirected
// exactly when S is inverse-closed.  Strong connectivity is cross-checked
// against <S> = G at construction time.
Graph build_cayley(const FiniteGroup& G, const std::vector<int>& S);

bool is_connected(const Graph& g); // strong connectivity when directed
bool is_bipartite(const Graph& g); // undirected; every component 2-colorable

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph complete_bipartite(int a, int b);

// Some graph with splitting-field degree exactly 2 on n vertices, for every
// n >= 3: P3, P4, then a complete bipartite K_{a,b} whose part product ab is
// not a perfect square (spectrum 0, +-sqrt(ab)).
Graph make_2_integral_graph(int n);

enum class ProductKind { cartesian, tensor, strong, lexicographic };
std::string product_kind_name(ProductKind k);

// Vertex (u, v) is numbered u * b.n + v, matching the direct-product group
// layout so Cayley graphs of product groups align vertex-for-vertex.  Both
// factors must be undirected.
Graph graph_product(const Graph& a, const Graph& b, ProductKind kind);

std::string to_dot(const Graph& g);
std::string to_edge_list(const Graph& g);

} // namespace caydeg
