#pragma once

// Exact arithmetic in cyclotomic fields Q(zeta_m).  An element is a rational
// coordinate vector over the power basis 1, zeta, ..., zeta^{phi(m)-1},
// reduced modulo the m-th cyclotomic polynomial.  The Galois action
// sigma_k : zeta -> zeta^k is applied through per-conductor cached tables of
// x^t mod Phi_m, so repeated orbit computations stay cheap.

#include "caydeg/poly.hpp"

#include <optional>

namespace caydeg {

// m-th cyclotomic polynomial Phi_m (monic, integer coefficients), computed by
// iterated exact division of x^m - 1 by the Phi_d for proper divisors d | m.
// Cached; the returned reference stays valid for the process lifetime.
const IntPoly& cyclotomic_polynomial(long m);

class CyclotomicElement {
public:
  CyclotomicElement() : CyclotomicElement(1) {} // zero of Q(zeta_1) = Q

  static CyclotomicElement zero(long m);
  static CyclotomicElement from_rational(long m, const Rat& v);
  static CyclotomicElement root_of_unity(long m, long e); // zeta_m^e, any e

  long conductor() const { return m_; }
  const std::vector<Rat>& coords() const { return c_; }

  CyclotomicElement operator+(const CyclotomicElement& o) const;
  CyclotomicElement operator-(const CyclotomicElement& o) const;
  CyclotomicElement operator*(const CyclotomicElement& o) const;
  CyclotomicElement& operator+=(const CyclotomicElement& o);

  bool operator==(const CyclotomicElement& o) const;
  bool operator!=(const CyclotomicElement& o) const { return !(*this == o); }
  bool operator<(const CyclotomicElement& o) const; // (m, coords) lexicographic

  bool is_zero() const;
  std::optional<Rat> as_rational() const; // value iff all higher coords vanish

  // Image under sigma_k; requires gcd(k, m) = 1.
  CyclotomicElement galois_apply(long k) const;

  // Number of distinct images under {sigma_k : k in H}; H holds units mod m_.
  long orbit_size_under(const std::vector<long>& H) const;

  std::string str() const; // e.g. "1 - 2*z^3 + 1/2*z^4" with z = zeta_m

private:
  explicit CyclotomicElement(long m);

  long m_;
  std::vector<Rat> c_; // length phi(m_)
};

// Monic minimal polynomial of alpha over Q: the product of (x - beta) over the
// distinct Galois conjugates beta.  Requires alpha to be an algebraic integer
// (true for sums of roots of unity, the only use here).
IntPoly minimal_polynomial(const CyclotomicElement& alpha);

} // namespace caydeg
