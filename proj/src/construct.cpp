#include "caydeg/construct.hpp"

#include "caydeg/numbers.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace caydeg {

std::vector<long> pointwise_stabilizer_units(long n, long d) {
  require(n >= 2 && d >= 1 && n % d == 0, "need d | n with n >= 2");
  std::vector<long> T;
  for (long u : unit_group(n).elements)
    if (u % (n / d) == 1 % (n / d)) T.push_back(u);
  return T;
}

OrbitSetResult orbit_set(long n, long d, long k, const std::vector<long>& K) {
  require(n >= 2, "orbit sets need modulus at least 2");
  require(d >= 1 && d < n && n % d == 0, "d must be a proper divisor of n");
  require(k >= 1 && k < n && std::gcd(k, n) == d, "need gcd(k, n) = d");

  const UnitGroup& U = unit_group(n);
  require(!K.empty() && std::is_sorted(K.begin(), K.end()), "K must be sorted and nonempty");
  for (long u : K) require(U.contains(u), "K must consist of units mod n");
  std::set<long> Kset(K.begin(), K.end());
  require(Kset.size() == K.size(), "K must not repeat elements");
  for (long a : K)
    for (long b : K)
      require(Kset.count((a * b) % n), "K must be closed under multiplication");

  OrbitSetResult r;
  r.n = n;
  r.d = d;
  r.k = k;
  r.Td = pointwise_stabilizer_units(n, d);
  for (long t : r.Td)
    require(Kset.count(t), "K must contain the pointwise stabilizer T_d");

  std::set<int> S;
  for (long u : K) S.insert(static_cast<int>((k * u) % n));
  r.set.assign(S.begin(), S.end());

  FiniteGroup G = build_cyclic(n);
  r.unit_index = U.order() / static_cast<long>(K.size());
  r.inverse_closed = std::all_of(r.set.begin(), r.set.end(), [&](int s) {
    return S.count(static_cast<int>((n - s) % n)) != 0;
  });
  r.generating = generates(G, r.set);
  r.degree = degree_abelian_formula(G, r.set);

  // Orbit structure facts, asserted on every construction.
  check_internal(r.inverse_closed == (Kset.count(n - 1) != 0),
                 "inverse closure holds exactly when -1 is in K");
  check_internal(static_cast<long>(r.set.size()) * static_cast<long>(r.Td.size()) ==
                     static_cast<long>(K.size()),
                 "orbit size equals the index |K : T_d|");
  check_internal(static_cast<long>(r.set.size()) <= euler_phi(n / d),
                 "orbit size is at most phi(n/d)");
  check_internal(r.generating == (d == 1), "the orbit generates exactly when d = 1");
  check_internal(r.unit_index % r.degree.degree == 0,
                 "the degree divides the index of K in the unit group");
  check_internal((r.degree.degree == 1) == (static_cast<long>(K.size()) == U.order()),
                 "integral exactly when K is the full unit group");
  if (r.degree.degree == 1) {
    std::vector<int> cls = bracket_class(G, G.power(1, d));
    check_internal(r.set == cls, "the integral case gives the whole bracket class");
  }
  return r;
}

CirculantResult construct_p_integral_circulant(long n, long p) {
  require(n >= 3, "need modulus at least 3");
  require(is_prime(p), "p must be prime");
  long phi = euler_phi(n);
  require(phi % p == 0,
          "p = " + std::to_string(p) + " does not divide phi(" + std::to_string(n) + ") = " +
              std::to_string(phi));

  const UnitGroup& U = unit_group(n);
  std::vector<std::vector<long>> candidates = subgroups_of_index(U, p);
  check_internal(!candidates.empty(), "a prime dividing phi(n) admits an index-p subgroup");
  long tau = n - 1; // the unit -1
  if (p != 2) {
    // index odd => the image of the order-2 unit -1 in the quotient is
    // trivial, so every candidate contains it
    for (const auto& K : candidates)
      check_internal(std::binary_search(K.begin(), K.end(), tau),
                     "odd-index subgroups contain -1");
  } else {
    std::vector<std::vector<long>> keep;
    for (auto& K : candidates)
      if (std::binary_search(K.begin(), K.end(), tau)) keep.push_back(std::move(K));
    if (keep.empty())
      fail(errc::validation,
           "no index-2 unit subgroup mod " + std::to_string(n) +
               " contains -1; no inverse-closed half-orbit set exists here");
    candidates = std::move(keep);
  }

  CirculantResult r;
  r.n = n;
  r.p = p;
  r.K = candidates.front(); // lexicographically least qualifying subgroup

  OrbitSetResult orb = orbit_set(n, 1, 1, r.K);
  r.set = orb.set;
  r.degree = orb.degree;
  check_internal(orb.inverse_closed, "p-integral circulant sets are inverse-closed");
  check_internal(orb.generating, "p-integral circulant sets generate");
  check_internal(static_cast<long>(r.set.size()) * p == phi, "valency is phi(n)/p");
  check_internal(r.degree.degree == p && !r.degree.lower_bound, "degree is exactly p");
  return r;
}

ProductResult product_connection_set(const FiniteGroup& G1, const std::vector<int>& S1,
                                     const FiniteGroup& G2, const std::vector<int>& S2,
                                     int form) {
  require(form >= 1 && form <= 4, "form must be 1..4");
  require(generates(G1, S1), "the first factor set must generate its group");
  require(generates(G2, S2), "the second factor set must generate its group");
  DegreeResult d1 = algebraic_degree(G1, S1);
  DegreeResult d2 = algebraic_degree(G2, S2);
  require(!d1.lower_bound, "the first factor needs an exact degree");
  require(d2.degree == 1 && !d2.lower_bound,
          "the second factor must be integral (degree 1), got degree " +
              std::to_string(d2.degree));

  Graph g1 = build_cayley(G1, S1);
  Graph g2 = build_cayley(G2, S2);
  require(!g1.directed && !g2.directed, "product forms need inverse-closed factor sets");
  bool bip1 = is_bipartite(g1), bip2 = is_bipartite(g2);
  if (form == 4 && bip1 && bip2)
    fail(errc::validation, "form 4 needs at most one bipartite factor; factor one bipartite: " +
                               std::string(bip1 ? "yes" : "no") + ", factor two bipartite: " +
                               std::string(bip2 ? "yes" : "no"));

  ProductResult r;
  r.form = form;
  r.group = build_direct_product(G1, G2);
  auto pair_index = [&](int a, int b) { return a * G2.n + b; };

  std::set<int> S;
  if (form == 1 || form == 3 || form == 4)
    for (int s2 : S2) S.insert(pair_index(0, s2));
  if (form == 1 || form == 3)
    for (int s1 : S1) S.insert(pair_index(s1, 0));
  if (form == 2 || form == 3)
    for (int s1 : S1)
      for (int s2 : S2) S.insert(pair_index(s1, s2));
  if (form == 4)
    for (int s1 : S1)
      for (int b = 0; b < G2.n; ++b) S.insert(pair_index(s1, b));
  r.set.assign(S.begin(), S.end());

  long v1 = static_cast<long>(S1.size()), v2 = static_cast<long>(S2.size());
  long expected_valency = form == 1   ? v1 + v2
                          : form == 2 ? v1 * v2
                          : form == 3 ? v1 + v2 + v1 * v2
                                      : v1 * G2.n + v2;
  r.valency = static_cast<long>(r.set.size());
  check_internal(r.valency == expected_valency, "product valency closed form");

  // The Cayley graph of the product set is the corresponding graph product.
  Graph built = build_cayley(r.group, r.set);
  ProductKind kind = form == 1   ? ProductKind::cartesian
                     : form == 2 ? ProductKind::tensor
                     : form == 3 ? ProductKind::strong
                                 : ProductKind::lexicographic;
  Graph direct = graph_product(g1, g2, kind);
  check_internal(built.bits == direct.bits && built.n == direct.n,
                 "product set builds the graph product");

  r.connected = is_connected(built);
  if (form == 2)
    check_internal(r.connected == !(bip1 && bip2),
                   "tensor products disconnect exactly for two bipartite factors");
  else
    check_internal(r.connected, "product graphs of connected factors are connected");

  r.degree = algebraic_degree(r.group, r.set);
  check_internal(r.degree.degree == d1.degree && !r.degree.lower_bound,
                 "products with an integral second factor keep the first factor's degree");
  return r;
}

LiftResult odd_valency_lift(const FiniteGroup& G, const std::vector<int>& S) {
  require(!S.empty() && std::is_sorted(S.begin(), S.end()), "set must be sorted and nonempty");
  require(S.size() % 2 == 0, "the lift starts from an even valency");
  for (int s : S)
    require(std::binary_search(S.begin(), S.end(), G.inv(s)),
            "the lift starts from an inverse-closed set");

  int x = -1;
  for (int v : involutions(G))
    if (G.is_central(v) && !std::binary_search(S.begin(), S.end(), v)) {
      x = v;
      break;
    }
  if (x < 0)
    fail(errc::validation,
         "no central involution outside the set: the lift needs an even-order group with a "
         "spare central involution");

  LiftResult r;
  r.added = x;
  r.set = S;
  r.set.insert(std::lower_bound(r.set.begin(), r.set.end(), x), x);

  DegreeResult before = algebraic_degree(G, S);
  r.degree = algebraic_degree(G, r.set);
  check_internal(r.degree.degree == before.degree && r.degree.lower_bound == before.lower_bound,
                 "adding a central involution keeps the degree");
  return r;
}

} // namespace caydeg
