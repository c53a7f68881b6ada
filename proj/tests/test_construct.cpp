#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "caydeg/construct.hpp"
#include "caydeg/graph.hpp"
#include "caydeg/numbers.hpp"

#include <algorithm>

using namespace caydeg;

TEST_CASE("pointwise stabilizer units") {
  CHECK(pointwise_stabilizer_units(20, 5) == std::vector<long>{1, 9, 13, 17}); // 1 mod 4
  CHECK(pointwise_stabilizer_units(20, 1) == std::vector<long>{1});
  CHECK(pointwise_stabilizer_units(20, 20).size() == 8); // all units
  CHECK(pointwise_stabilizer_units(12, 2) == std::vector<long>{1, 7}); // 1 mod 6
}

TEST_CASE("orbit sets over Z_n") {
  // layer d=5 of Z20, K = T_5: directed singleton {5}, degree 2 on <5> = Z4
  auto r = orbit_set(20, 5, 5, pointwise_stabilizer_units(20, 5));
  CHECK(r.set == std::vector<int>{5});
  CHECK(r.unit_index == 2);
  CHECK(!r.inverse_closed);
  CHECK(!r.generating); // d = 5 != 1
  CHECK(r.degree.degree == 2);

  // full unit group on the generator layer: the whole class, integral
  const UnitGroup& U20 = unit_group(20);
  auto full = orbit_set(20, 1, 1, U20.elements);
  CHECK(full.set == std::vector<int>{1, 3, 7, 9, 11, 13, 17, 19});
  CHECK(full.unit_index == 1);
  CHECK(full.inverse_closed);
  CHECK(full.generating);
  CHECK(full.degree.degree == 1);

  // index-2 subgroup containing -1: the worked degree-2 family set
  auto fam = orbit_set(20, 1, 1, {1, 9, 11, 19});
  CHECK(fam.set == std::vector<int>{1, 9, 11, 19});
  CHECK(fam.unit_index == 2);
  CHECK(fam.inverse_closed);
  CHECK(fam.generating);
  CHECK(fam.degree.degree == 2);

  // validation: K must contain T_d, k must have gcd(k, n) = d, K must be closed
  CHECK_THROWS_AS(orbit_set(20, 5, 5, {1}), error);             // misses T_5
  CHECK_THROWS_AS(orbit_set(20, 1, 2, unit_group(20).elements), error); // gcd(2,20) != 1
  CHECK_THROWS_AS(orbit_set(20, 1, 1, {1, 9, 11}), error);      // not a subgroup
  CHECK_THROWS_AS(orbit_set(20, 3, 3, {1}), error);             // 3 does not divide 20
}

TEST_CASE("p-integral circulants") {
  // frozen: n = 27, p = 3
  auto r = construct_p_integral_circulant(27, 3);
  CHECK(r.set == std::vector<int>{1, 8, 10, 17, 19, 26});
  CHECK(r.degree.degree == 3);
  CHECK(static_cast<long>(r.set.size()) == euler_phi(27) / 3);
  CHECK(std::find(r.K.begin(), r.K.end(), 26) != r.K.end()); // -1 in K

  // the order-20 quadratic family set comes out of the p = 2 recipe
  auto q = construct_p_integral_circulant(20, 2);
  CHECK(q.set == std::vector<int>{1, 9, 11, 19});
  CHECK(q.degree.degree == 2);

  // cubic circulant on 7 vertices: C7 itself
  auto c = construct_p_integral_circulant(7, 3);
  CHECK(c.set == std::vector<int>{1, 6});
  CHECK(c.degree.degree == 3);

  // p = 2 failures: no index-2 unit subgroup contains -1
  CHECK_THROWS_AS(construct_p_integral_circulant(7, 2), error);
  CHECK_THROWS_AS(construct_p_integral_circulant(3, 2), error);
  CHECK_THROWS_AS(construct_p_integral_circulant(4, 2), error);
  CHECK_THROWS_AS(construct_p_integral_circulant(6, 2), error);

  // p must divide phi(n)
  CHECK_THROWS_AS(construct_p_integral_circulant(10, 3), error);

  // p = 2 succeeds or fails exactly by phi(n) mod 4 (spot checks)
  for (long n : {5L, 8L, 12L, 13L, 15L, 16L, 20L, 24L}) {
    CHECK(euler_phi(n) % 4 == 0);
    CHECK(construct_p_integral_circulant(n, 2).degree.degree == 2);
  }
  for (long n : {9L, 11L, 14L, 18L, 22L, 27L}) {
    CHECK(euler_phi(n) % 4 == 2);
    CHECK_THROWS_AS(construct_p_integral_circulant(n, 2), error);
  }
}

TEST_CASE("product connection sets, all four forms") {
  FiniteGroup Z20 = build_cyclic(20);
  std::vector<int> S1 = {1, 9, 11, 19}; // degree 2, valency 4, not bipartite
  FiniteGroup Z4 = build_cyclic(4);
  std::vector<int> S2 = {1, 2, 3}; // K4 on Z4: integral, valency 3, not bipartite

  long d1 = static_cast<long>(S1.size());
  long d2 = static_cast<long>(S2.size());

  for (int form = 1; form <= 4; ++form) {
    auto r = product_connection_set(Z20, S1, Z4, S2, form);
    CHECK(r.form == form);
    CHECK(r.group.n == 80);
    CHECK(r.degree.degree == 2); // first-factor degree preserved
    CHECK(r.connected);
    long expect = 0;
    switch (form) {
      case 1: expect = d1 + d2; break;
      case 2: expect = d1 * d2; break;
      case 3: expect = d1 + d2 + d1 * d2; break;
      case 4: expect = d1 * Z4.n + d2; break;
    }
    CHECK(r.valency == expect);
    CHECK(static_cast<long>(r.set.size()) == expect);
    // the product set is a genuine connection set of the product group
    Graph g = build_cayley(r.group, r.set);
    CHECK(g.is_regular());
    CHECK(!g.directed);
  }

  // both factors bipartite: form 2 is disconnected but accepted
  FiniteGroup Z12 = build_cyclic(12);
  std::vector<int> B1 = {1, 11}; // C12, bipartite, degree 2
  FiniteGroup Z2 = build_cyclic(2);
  std::vector<int> B2 = {1}; // K2, bipartite, integral
  auto t = product_connection_set(Z12, B1, Z2, B2, 2);
  CHECK(!t.connected);
  CHECK(t.degree.degree == 2);

  // ... while form 4 rejects two bipartite factors outright
  CHECK_THROWS_AS(product_connection_set(Z12, B1, Z2, B2, 4), error);
  // forms 1 and 3 stay connected there
  CHECK(product_connection_set(Z12, B1, Z2, B2, 1).connected);
  CHECK(product_connection_set(Z12, B1, Z2, B2, 3).connected);

  // second factor must be integral
  CHECK_THROWS_AS(product_connection_set(Z20, S1, Z12, {1, 11}, 1), error);
  // factor sets must generate (connected factors)
  CHECK_THROWS_AS(product_connection_set(Z20, {4, 16}, Z4, S2, 1), error);
  // form out of range
  CHECK_THROWS_AS(product_connection_set(Z20, S1, Z4, S2, 5), error);

  // nonabelian first factor works too: D10 rotation pair (degree 2) x K2
  FiniteGroup D = parse_group_spec("D10");
  int a = D.parse_element("a");
  std::vector<int> rot = {a, D.inv(a)};
  std::sort(rot.begin(), rot.end());
  std::vector<int> gen = rot;
  gen.push_back(D.parse_element("x"));
  std::sort(gen.begin(), gen.end());
  auto dr = product_connection_set(D, gen, Z2, B2, 1);
  CHECK(dr.group.n == 20);
  CHECK(dr.degree.degree == algebraic_degree(D, gen).degree);
}

TEST_CASE("odd valency lift") {
  // Z8 with {1, 2, 6, 7}: even valency 4, central involution 4 is added
  FiniteGroup Z8 = build_cyclic(8);
  auto r = odd_valency_lift(Z8, {1, 2, 6, 7});
  CHECK(r.added == 4);
  CHECK(r.set == std::vector<int>{1, 2, 4, 6, 7});
  auto before = algebraic_degree(Z8, {1, 2, 6, 7}, true);
  auto after = algebraic_degree(Z8, r.set, true);
  CHECK(r.degree.degree == before.degree);
  CHECK(after.degree == before.degree);
  REQUIRE(after.field.has_value());
  REQUIRE(before.field.has_value());
  CHECK(after.field->discriminants == before.field->discriminants);

  // no central involution available: odd group order
  CHECK_THROWS_AS(odd_valency_lift(build_cyclic(5), {1, 4}), error);
  // valency already odd
  CHECK_THROWS_AS(odd_valency_lift(Z8, {1, 4, 7}), error);
  // every central involution already in S
  CHECK_THROWS_AS(odd_valency_lift(Z8, {1, 4, 3, 5}), error);

  // nonabelian: D10 has trivial center, so no lift despite involutions
  FiniteGroup D = parse_group_spec("D10");
  int a = D.parse_element("a");
  CHECK_THROWS_AS(odd_valency_lift(D, {a, D.inv(a)}), error);
}
