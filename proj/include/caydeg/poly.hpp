#pragma once

// Dense univariate polynomials over Z (low-order coefficient first).  All
// arithmetic is exact; divisions assert exactness.  gcds use the subresultant
// pseudo-remainder sequence so coefficients stay integral throughout.

#include "caydeg/common.hpp"

namespace caydeg {

class IntPoly {
public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }
  static IntPoly constant(Int v) { return IntPoly(std::vector<Int>{std::move(v)}); }
  static IntPoly x_power(int k); // x^k

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
  const Int& lc() const;
  const Int& operator[](size_t i) const { return c_[i]; }
  const std::vector<Int>& coeffs() const { return c_; }
  bool is_monic() const { return !is_zero() && lc() == 1; }

  IntPoly operator-() const;
  IntPoly operator+(const IntPoly& o) const;
  IntPoly operator-(const IntPoly& o) const;
  IntPoly operator*(const IntPoly& o) const;
  bool operator==(const IntPoly& o) const { return c_ == o.c_; }

  IntPoly scaled(const Int& k) const;
  IntPoly derivative() const;
  Int eval(const Int& v) const;
  Rat eval(const Rat& v) const;

  Int content() const;           // gcd of coefficients, sign of lc (0 for zero)
  IntPoly primitive_part() const;
  Int norm2_squared() const;     // sum of squared coefficients

  std::string str(const std::string& var = "x") const;

private:
  void trim();
  std::vector<Int> c_;
};

// Exact quotient f / g (fails if the division has a remainder).
IntPoly div_exact(const IntPoly& f, const IntPoly& g);

// Pseudo-remainder: lc(g)^(deg f - deg g + 1) * f = q*g + r with deg r < deg g.
IntPoly pseudo_rem(const IntPoly& f, const IntPoly& g);

// gcd with positive leading coefficient, primitive up to the content gcd.
IntPoly poly_gcd(const IntPoly& f, const IntPoly& g);

// Yun squarefree decomposition of a primitive polynomial (content handled by
// the caller): returns (g_i, i) with f = +- prod g_i^i, each g_i squarefree,
// pairwise coprime, positive leading coefficients, sorted by multiplicity.
std::vector<std::pair<IntPoly, int>> squarefree_decomposition(const IntPoly& f);

// The squarefree part f / gcd(f, f'), primitive with positive lc.
IntPoly squarefree_part(const IntPoly& f);

} // namespace caydeg
