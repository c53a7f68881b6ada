#pragma once

// Exact spectral data: characteristic polynomials (division-free), splitting
// field classification from the factored squarefree part, and — for abelian
// groups — eigenvalues as exact cyclotomic sums, giving a path to the degree
// that is independent of both the unit-stabilizer formulas and the
// factorization route.

#include "caydeg/cyclotomic.hpp"
#include "caydeg/factor.hpp"
#include "caydeg/graph.hpp"

#include <optional>

namespace caydeg {

// Largest order the characteristic-polynomial path accepts.
inline constexpr int kSpectralCap = 300;

// Monic det(xI - A) by the Faddeev-LeVerrier recurrence; 0/1 adjacency makes
// every step a batch of big-integer row additions.  Works for directed
// (asymmetric) adjacency as well.
IntPoly char_poly(const Graph& g);

// Fraction-free (Bareiss) determinant, used to cross-check char_poly's
// constant term on small instances.
Int determinant(std::vector<std::vector<Int>> m);

struct SplittingFieldInfo {
  enum class Kind { rational, multiquadratic, partial };
  Kind kind = Kind::rational;
  // Exact extension degree for rational/multiquadratic; for partial, the
  // largest irreducible-factor degree — a lower bound on the true degree.
  long degree = 1;
  bool lower_bound = false;
  // Independent squarefree discriminants (echelon basis of the square-class
  // subgroup generated by the quadratic factors), sorted.
  std::vector<Int> discriminants;
  // A maximal-degree irreducible factor blocking exactness (partial only).
  IntPoly witness;

  bool two_integral() const {
    return kind == Kind::multiquadratic && degree == 2 && !lower_bound;
  }
  std::string str() const;
};

// Classify the field generated by all roots of the given irreducible factors:
// all linear -> rational; all degree <= 2 -> multiquadratic with degree
// 2^(basis rank); any factor of degree >= 3 -> partial (degree becomes a
// lower bound; quadratic discriminants still reported).
SplittingFieldInfo splitting_field_from_factors(const std::vector<std::pair<IntPoly, int>>& factors);

// char_poly -> squarefree part -> factor -> classify.
SplittingFieldInfo splitting_field_of(const Graph& g);

long distinct_eigenvalue_count(const Graph& g);

struct TwoIntegralCertificate {
  bool two_integral = false;
  Int discriminant = 0; // field = Q(sqrt(discriminant)) when two_integral
  IntPoly witness;      // an irreducible factor of degree >= 3, when present
  std::string reason;
};
TwoIntegralCertificate is_2_integral(const Graph& g);

// Character table of an abelian group: value of character c at element g is
// zeta_m ^ exponent[c][g], m = exponent(G).
struct CharacterTable {
  long m = 1;
  std::vector<std::vector<long>> exponent; // [character][element]
};
CharacterTable abelian_characters(const FiniteGroup& G);

// One eigenvalue per character: lambda_c = sum_{s in S} zeta_m^exponent[c][s].
std::vector<CyclotomicElement> eigenvalues_abelian(const FiniteGroup& G,
                                                   const std::vector<int>& S);

// Exact algebraic degree from the character eigenvalues: phi(m) over the size
// of {k coprime to m : sigma_k fixes every eigenvalue}.  Field info is
// attached when every eigenvalue has Galois orbit size <= 2 (each irrational
// eigenvalue then yields a quadratic discriminant); otherwise the degree is
// still exact but the field classification is left to the spectral path.
struct CharacterDegree {
  long degree = 1;
  std::vector<long> stabilizer; // units mod m fixing the spectrum pointwise
  long modulus = 1;
  std::optional<SplittingFieldInfo> field;
};
CharacterDegree algebraic_degree_characters(const FiniteGroup& G, const std::vector<int>& S);

} // namespace caydeg
