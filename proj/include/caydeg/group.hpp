#pragma once

// Finite groups as explicit multiplication tables (order <= 4096), covering
// the constructions the classification work needs: cyclic groups, direct
// products, generalized dihedral groups, and the two non-nilpotent order-250
// extensions of the order-125 exponent-5 group.  Elements are indexed
// 0..n-1 with 0 the identity; every element carries a word in the printed
// generators so sets round-trip through text.

#include "caydeg/common.hpp"

#include <cstdint>

namespace caydeg {

inline constexpr int kGroupOrderCap = 4096; // uint16_t table entries
inline constexpr int kFullAxiomCheckCap = 300; // full n^3 associativity below this

struct FiniteGroup {
  int n = 0;
  std::string spec;    // canonical constructor string, e.g. "Z12xZ2"
  std::string tag;     // coarse kind: cyclic | product | gdih | g5 | g250 | subgroup
  bool abelian = true;
  long exponent = 1;
  std::vector<uint16_t> table;         // row-major: table[a*n + b] = a*b
  std::vector<int> inverse;            // inverse[g]
  std::vector<std::string> names;      // element words; names[0] == "e"
  std::vector<std::string> gen_names;  // printed generator letters, one char each
  std::vector<int> gens;               // element index of each printed generator
  std::vector<int> gen_orders;         // order of each printed generator
  // factored word backing each name: (generator slot, exponent), slots
  // ascending, exponents in [1, slot order).  Empty for subgroup quotients,
  // whose names are carried over from the parent instead.
  std::vector<std::vector<std::pair<int, int>>> words;

  int mul(int a, int b) const { return table[static_cast<size_t>(a) * n + b]; }
  int inv(int g) const { return inverse[g]; }
  int conj(int g, int x) const { return mul(mul(inv(x), g), x); } // g^x
  int power(int g, long e) const;
  int element_order(int g) const;
  bool is_central(int g) const;

  // Looks a word up: "e", "a^3*b", "bx", or a bare integer exponent k meaning
  // gen^k when the group is cyclic.  Errors carry the offending token.
  int parse_element(const std::string& word) const;

  // Identity / inverse laws plus associativity; full n^3 check when
  // n <= kFullAxiomCheckCap, otherwise all generator-anchored triples and a
  // seeded random sample.  Called by every builder.
  void validate() const;
};

FiniteGroup build_cyclic(long n);
FiniteGroup build_direct_product(const FiniteGroup& a, const FiniteGroup& b);
FiniteGroup build_generalized_dihedral(const FiniteGroup& a); // a abelian
FiniteGroup build_heisenberg5();                              // order 125, exponent 5
FiniteGroup build_g250(int variant);                          // 1 or 2; order 250

// Group spec mini-language: "Zn", "D2m" (dihedral of order 2m), "G5",
// "G250.1", "G250.2", "GDih(<abelian spec>)", powers "Z2^3", and x-joined
// products such as "Z5xZ2^2" or "Z5xD10".
FiniteGroup parse_group_spec(const std::string& spec);

// Connection-set spec: comma-separated element words, e.g. "1,9,11,19" over a
// cyclic group or "a*x,b*x" elsewhere.  Deduplicated, sorted, identity barred.
std::vector<int> parse_connection_set(const FiniteGroup& G, const std::string& spec);
std::string set_to_words(const FiniteGroup& G, const std::vector<int>& S);

std::vector<int> generated_subgroup(const FiniteGroup& G, const std::vector<int>& S);
bool generates(const FiniteGroup& G, const std::vector<int>& S);

// [g] = {h : <h> = <g>}, the elements generating the same cyclic subgroup.
std::vector<int> bracket_class(const FiniteGroup& G, int g);
// Partition of G into bracket classes, each sorted, ordered by least member.
std::vector<std::vector<int>> omega_partition(const FiniteGroup& G);

// S^k = {s^k}; requires gcd(k, exponent) = 1 so the map is a bijection.
std::vector<int> power_map(const FiniteGroup& G, const std::vector<int>& S, long k);

std::vector<int> center(const FiniteGroup& G);
std::vector<int> involutions(const FiniteGroup& G);

struct NormalityCertificate {
  bool normal = true;
  int element = -1;     // s in S with s^x outside S (when not normal)
  int conjugator = -1;  // the x
};
NormalityCertificate is_normal_subset(const FiniteGroup& G, const std::vector<int>& S);

// Group structure induced on a subgroup (elements must be closed under the
// table).  Element names carry over; `index_map`, when given, receives the
// old-index -> new-index map (-1 outside the subgroup).
FiniteGroup subgroup_group(const FiniteGroup& G, const std::vector<int>& elements,
                           std::vector<int>* index_map = nullptr);

// All automorphisms of an abelian group built from independent cyclic
// generator slots, each returned as a full image vector.  Brute force over
// generator images; intended for the desk-scale orders the verifier scans.
std::vector<std::vector<int>> abelian_automorphisms(const FiniteGroup& G);

} // namespace caydeg
