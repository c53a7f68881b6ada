#pragma once

// Elementary number theory used by the degree formulas: Euler phi, squarefree
// parts, factorization helpers, and the unit group (Z/n)^* with an explicit
// cyclic decomposition so that index-p subgroups can be enumerated as
// hyperplane pullbacks.

#include "caydeg/common.hpp"

#include <map>

namespace caydeg {

bool is_prime(long n);
std::vector<std::pair<long, long>> factorize(long n); // (prime, exponent), ascending
std::vector<long> divisors(long n);                   // sorted ascending
long euler_phi(long n);
long powmod(long base, long exp, long mod);

// Squarefree part d of n: n = d * (square), sign preserved, squarefree_part(0)=0.
Int squarefree_part(const Int& n);
bool is_square(const Int& n); // n >= 0 perfect square?

// Multiplicative group mod n with a fixed cyclic decomposition
//   U = <gens[0]> x ... x <gens[r-1]>,  orders[i] = ord(gens[i]),
// plus discrete logs for every unit (n is desk-scale, phi(n) stays small).
struct UnitGroup {
  long modulus = 1;
  std::vector<long> elements;           // sorted units
  std::vector<long> gens;               // CRT-lifted cyclic generators
  std::vector<long> orders;             // orders of gens, prod = phi(n)
  std::map<long, std::vector<long>> log; // unit -> exponent tuple

  long order() const { return static_cast<long>(elements.size()); }
  bool contains(long u) const { return log.count(((u % modulus) + modulus) % modulus) > 0; }
};

UnitGroup unit_group(long n);

// All subgroups of U of index exactly p (p prime), each returned as a sorted
// unit list; the list of subgroups is itself sorted lexicographically.  There
// are (p^r - 1)/(p - 1) of them, r = #cyclic factors with order divisible by p.
std::vector<std::vector<long>> subgroups_of_index(const UnitGroup& U, long p);

// Every subgroup of U, each as a sorted unit list, ordered by size then
// lexicographically: the closure of the cyclic subgroups under pairwise
// joins.  Fine for the small moduli the constructions sweep.
std::vector<std::vector<long>> all_unit_subgroups(const UnitGroup& U);

} // namespace caydeg
