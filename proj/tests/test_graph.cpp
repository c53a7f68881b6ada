#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "caydeg/graph.hpp"
#include "caydeg/spectra.hpp"
#include "caydeg/verify.hpp"

#include <string>

using namespace caydeg;

TEST_CASE("cayley graph shapes") {
  // Cay(Z5, {1,4}) is the pentagon
  Graph c5 = build_cayley(build_cyclic(5), {1, 4});
  CHECK(c5.n == 5);
  CHECK(!c5.directed);
  int deg = 0;
  CHECK(c5.is_regular(&deg));
  CHECK(deg == 2);
  CHECK(c5.edge_count() == 5);
  CHECK(is_connected(c5));
  CHECK(!is_bipartite(c5));
  CHECK(c5.is_symmetric());

  // Cay(Z5, all non-identity) = K5
  Graph k5 = build_cayley(build_cyclic(5), {1, 2, 3, 4});
  CHECK(k5.edge_count() == 10);
  CHECK(k5.max_degree() == 4);

  // Cay(Z20, {2,18}): two disjoint 10-cycles
  Graph two = build_cayley(build_cyclic(20), {2, 18});
  CHECK(!is_connected(two));
  CHECK(two.is_regular(&deg));
  CHECK(deg == 2);

  // directed pentagon: Cay(Z5, {1})
  Graph d5 = build_cayley(build_cyclic(5), {1});
  CHECK(d5.directed);
  CHECK(!d5.is_symmetric());
  CHECK(d5.out_degree(0) == 1);
  CHECK(d5.arc_count() == 5);
  CHECK(is_connected(d5)); // strongly connected
  CHECK(d5.out_neighbors(0) == std::vector<int>{1});
  CHECK(d5.in_neighbors(0) == std::vector<int>{4});

  CHECK_THROWS_AS(build_cayley(build_cyclic(5), {0}), error); // loop-free
}

TEST_CASE("connectivity equals generation") {
  // exhaustive over abelian groups of order <= 16 and sets of size <= 3
  for (const FiniteGroup& G : enumerate_abelian_groups(16)) {
    if (G.n < 2) continue;
    for (int v = 1; v <= 3 && v <= G.n - 1; ++v) {
      enumerate_connection_sets(G, v, false, false, [&](const std::vector<int>& S) {
        Graph g = build_cayley(G, S);
        CHECK(is_connected(g) == generates(G, S));
        return true;
      });
    }
  }
  // and on a nonabelian group
  FiniteGroup D = parse_group_spec("D10");
  for (int a = 1; a < D.n; ++a)
    for (int b = a + 1; b < D.n; ++b) {
      std::vector<int> S = {a, b};
      CHECK(is_connected(build_cayley(D, S)) == generates(D, S));
    }
}

TEST_CASE("bipartiteness") {
  CHECK(is_bipartite(cycle_graph(6)));
  CHECK(!is_bipartite(cycle_graph(5)));
  CHECK(is_bipartite(complete_bipartite(3, 3)));
  CHECK(is_bipartite(build_cayley(build_cyclic(12), {1, 11})));
  CHECK(!is_bipartite(complete_graph(3)));
  CHECK(is_bipartite(path_graph(7)));
  // disconnected: every component must be 2-colorable (two even cycles)
  CHECK(is_bipartite(build_cayley(build_cyclic(20), {2, 18})));
  // two odd cycles
  CHECK(!is_bipartite(build_cayley(build_cyclic(10), {2, 8})));
}

TEST_CASE("standard graphs") {
  Graph p4 = path_graph(4);
  CHECK(p4.n == 4);
  CHECK(p4.edge_count() == 3);
  Graph k23 = complete_bipartite(2, 3);
  CHECK(k23.n == 5);
  CHECK(k23.edge_count() == 6);
  Graph k4 = complete_graph(4);
  CHECK(k4.edge_count() == 6);
  Graph c7 = cycle_graph(7);
  CHECK(c7.edge_count() == 7);
}

TEST_CASE("graph products") {
  Graph k2 = complete_graph(2);

  // K2 box K2 = C4
  Graph c4 = graph_product(k2, k2, ProductKind::cartesian);
  CHECK(c4.n == 4);
  CHECK(c4.edge_count() == 4);
  int deg = 0;
  CHECK(c4.is_regular(&deg));
  CHECK(deg == 2);
  CHECK(is_connected(c4));
  CHECK(is_bipartite(c4));

  // C3 tensor K2 = C6
  Graph c6 = graph_product(cycle_graph(3), k2, ProductKind::tensor);
  CHECK(c6.n == 6);
  CHECK(c6.edge_count() == 6);
  CHECK(c6.is_regular(&deg));
  CHECK(deg == 2);
  CHECK(is_connected(c6));
  CHECK(is_bipartite(c6));

  // K2 strong K2 = K4
  Graph k4 = graph_product(k2, k2, ProductKind::strong);
  CHECK(k4.n == 4);
  CHECK(k4.edge_count() == 6);

  // K2 lex (2 isolated vertices) = K_{2,2} = C4
  Graph e2 = Graph::empty(2);
  Graph lex = graph_product(k2, e2, ProductKind::lexicographic);
  CHECK(lex.n == 4);
  CHECK(lex.edge_count() == 4);
  CHECK(is_bipartite(lex));
  CHECK(is_connected(lex));

  // vertex counts multiply; regular inputs give regular outputs
  Graph big = graph_product(cycle_graph(5), complete_graph(3), ProductKind::strong);
  CHECK(big.n == 15);
  CHECK(big.is_regular(&deg));
  CHECK(deg == 2 + 2 + 2 * 2); // d1 + d2 + d1*d2

  // directed inputs are rejected
  Graph dir = build_cayley(build_cyclic(5), {1});
  CHECK_THROWS_AS(graph_product(dir, k2, ProductKind::cartesian), error);
  CHECK_THROWS_AS(graph_product(k2, Graph::empty(0), ProductKind::lexicographic), error);
}

TEST_CASE("2-integral graph factory") {
  for (int n = 3; n <= 30; ++n) {
    Graph g = make_2_integral_graph(n);
    CHECK(g.n == n);
    auto cert = is_2_integral(g);
    CHECK(cert.two_integral);
  }
  CHECK_THROWS_AS(make_2_integral_graph(2), error);

  // the documented instances
  CHECK(make_2_integral_graph(3).edge_count() == 2); // P3
  CHECK(make_2_integral_graph(4).edge_count() == 3); // P4
  CHECK(is_2_integral(make_2_integral_graph(4)).discriminant == 5);
  CHECK(is_2_integral(make_2_integral_graph(8)).discriminant == 3);  // K_{2,6}
  CHECK(is_2_integral(make_2_integral_graph(10)).discriminant == 21); // K_{3,7}
}

TEST_CASE("exports") {
  Graph c3 = cycle_graph(3);
  std::string dot = to_dot(c3);
  CHECK(dot.find("graph G {") != std::string::npos);
  CHECK(dot.find("0 -- 1;") != std::string::npos);
  CHECK(dot.find("->") == std::string::npos);

  Graph d = build_cayley(build_cyclic(3), {1});
  std::string ddot = to_dot(d);
  CHECK(ddot.find("digraph G {") != std::string::npos);
  CHECK(ddot.find("0 -> 1;") != std::string::npos);

  std::string el = to_edge_list(c3);
  CHECK(el.find("0 1") != std::string::npos);
  CHECK(el.find("0 2") != std::string::npos);
  CHECK(el.find("1 2") != std::string::npos);
}
