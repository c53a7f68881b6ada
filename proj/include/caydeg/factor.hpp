#pragma once

// Factorization of monic integer polynomials: Yun squarefree split, then per
// squarefree part a Zassenhaus round — factor mod a small odd prime p at which
// the part stays squarefree (distinct-degree + Cantor–Zassenhaus equal-degree
// splitting), Hensel-lift the modular factors above the Landau–Mignotte bound,
// and recombine by subset search (capped).

#include "caydeg/poly.hpp"

namespace caydeg {

// Iteration cap for the subset recombination stage.
inline constexpr long kRecombinationCap = 1 << 20;
// Degree cap for squarefree parts entering the modular stage.
inline constexpr int kFactorDegreeCap = 64;

// Complete irreducible factorization over Z of a monic polynomial of degree
// >= 1.  Returns monic irreducible factors with multiplicities, sorted by
// (degree, coefficient list); the product reconstructs the input.
// Errors: cap_exceeded if a squarefree part has degree > kFactorDegreeCap
// ("spectral path unavailable") or the recombination cap is hit.
std::vector<std::pair<IntPoly, int>> factor_over_Z(const IntPoly& f);

} // namespace caydeg
