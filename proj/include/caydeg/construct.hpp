#pragma once

// Constructions of k-integral Cayley graphs: unit-orbit circulant sets, the
// p-integral circulant recipe, the four product-set forms, and the central
// involution lift that bumps an even valency to odd without moving the
// splitting field.

#include "caydeg/degree.hpp"
#include "caydeg/group.hpp"

namespace caydeg {

// Orbit of a^k under a unit subgroup K containing the pointwise stabilizer
// T_d of the order-(n/d) layer, d = gcd(k, n).  The classical structure facts
// are asserted on every construction: the set is inverse-closed exactly when
// -1 lies in K, its size is the index |K : T_d| (at most phi(n/d)), it
// generates exactly when d = 1, its degree divides the index of K in the full
// unit group, and it is integral exactly when K is the full unit group (then
// the set is the whole bracket class of a^d).
struct OrbitSetResult {
  long n = 0, d = 0, k = 0;
  std::vector<int> set;       // over Z_n
  std::vector<long> Td;       // units congruent to 1 mod n/d
  long unit_index = 1;        // |units mod n : K|
  bool inverse_closed = false;
  bool generating = false;
  DegreeResult degree;
};
OrbitSetResult orbit_set(long n, long d, long k, const std::vector<long>& K);

// Units congruent to 1 mod n/d: the kernel of the restriction to the
// subgroup of index d.
std::vector<long> pointwise_stabilizer_units(long n, long d);

// Inverse-closed generating circulant set over Z_n with degree exactly p:
// the lexicographically least index-p unit subgroup containing -1, taken as
// the orbit of 1.  Valency phi(n)/p.  For odd p every index-p subgroup
// works; for p = 2 a subgroup containing -1 may not exist, which is a
// reported error, not a fallback.
struct CirculantResult {
  long n = 0, p = 0;
  std::vector<int> set;
  std::vector<long> K;
  DegreeResult degree; // degree == p, verified
};
CirculantResult construct_p_integral_circulant(long n, long p);

// Product set over G1 x G2 from factor sets S1 (degree k, connected) and S2
// (integral, connected), preserving the degree of the first factor:
//   form 1: (s1, e) and (e, s2)            valency d1 + d2       [cartesian]
//   form 2: (s1, s2)                       valency d1 * d2       [tensor]
//   form 3: union of forms 1 and 2         valency d1 + d2 + d1*d2 [strong]
//   form 4: (s1, g2) for every g2, (e, s2) valency d1*|G2| + d2  [lexicographic]
// Form 4 requires at most one bipartite factor; form 2 yields a disconnected
// graph exactly when both factors are bipartite (accepted, flagged).
struct ProductResult {
  FiniteGroup group; // G1 x G2
  std::vector<int> set;
  int form = 1;
  long valency = 0;
  bool connected = false;
  DegreeResult degree; // equals the degree of Cay(G1, S1), verified
};
ProductResult product_connection_set(const FiniteGroup& G1, const std::vector<int>& S1,
                                     const FiniteGroup& G2, const std::vector<int>& S2,
                                     int form);

// S together with the least central involution outside S; the splitting
// field is unchanged, so an even valency becomes odd at the same degree.
struct LiftResult {
  std::vector<int> set;
  int added = -1;
  DegreeResult degree;
};
LiftResult odd_valency_lift(const FiniteGroup& G, const std::vector<int>& S);

} // namespace caydeg
