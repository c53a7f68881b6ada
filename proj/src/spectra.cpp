#include "caydeg/spectra.hpp"

#include "caydeg/numbers.hpp"

#include <algorithm>
#include <boost/multiprecision/miller_rabin.hpp>
#include <map>
#include <set>
#include <sstream>

namespace caydeg {

IntPoly char_poly(const Graph& g) {
  int n = g.n;
  require(n <= kSpectralCap,
          "spectral path unavailable: order " + std::to_string(n) + " exceeds cap " +
              std::to_string(kSpectralCap),
          errc::cap_exceeded);
  std::vector<std::vector<int>> nbr(n);
  for (int u = 0; u < n; ++u) nbr[u] = g.out_neighbors(u);

  // Faddeev-LeVerrier: M_0 = I; N = A M_{k-1}; c_{n-k} = -tr(N)/k;
  // M_k = N + c_{n-k} I.  A is 0/1 so A*M is pure row addition.
  std::vector<std::vector<Int>> M(n, std::vector<Int>(n)), N(n, std::vector<Int>(n));
  for (int i = 0; i < n; ++i) M[i][i] = 1;
  std::vector<Int> coeff(n + 1);
  coeff[n] = 1;
  for (int k = 1; k <= n; ++k) {
    for (int i = 0; i < n; ++i) {
      auto& row = N[i];
      for (int j = 0; j < n; ++j) row[j] = 0;
      for (int t : nbr[i]) {
        const auto& src = M[t];
        for (int j = 0; j < n; ++j) row[j] += src[j];
      }
    }
    Int tr = 0;
    for (int i = 0; i < n; ++i) tr += N[i][i];
    check_internal(tr % k == 0, "Faddeev-LeVerrier trace divisibility");
    Int ck = -tr / k;
    coeff[n - k] = ck;
    if (k < n) {
      M.swap(N);
      for (int i = 0; i < n; ++i) M[i][i] += ck;
    }
  }
  return IntPoly(std::move(coeff));
}

Int determinant(std::vector<std::vector<Int>> a) {
  int n = static_cast<int>(a.size());
  if (n == 0) return 1;
  for (auto& row : a) require(static_cast<int>(row.size()) == n, "determinant needs a square matrix");
  Int denom = 1;
  int sign = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      int r = k + 1;
      while (r < n && a[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(a[k], a[r]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / denom;
      a[i][k] = 0;
    }
    denom = a[k][k];
  }
  return sign > 0 ? a[n - 1][n - 1] : -a[n - 1][n - 1];
}

namespace {

// Odd-exponent prime support of d (with -1 for the sign), i.e. coordinates of
// the square class of d over GF(2).  Discriminants here come from quadratic
// factors of characteristic polynomials, so they are small; the leftover
// after trial division is certified prime or rejected.
std::set<Int> square_class_support(Int d) {
  check_internal(d != 0, "square class of 0");
  std::set<Int> support;
  if (d < 0) {
    support.insert(-1);
    d = -d;
  }
  for (long p = 2; p * p <= d && p < (1L << 20); ++p) {
    if (d % p != 0) continue;
    int e = 0;
    while (d % p == 0) {
      d /= p;
      ++e;
    }
    if (e % 2) support.insert(p);
  }
  if (d > 1) {
    if (is_square(d)) {
      // even exponent leftover, nothing to add
    } else if (boost::multiprecision::miller_rabin_test(d, 32)) {
      support.insert(d);
    } else {
      fail(errc::cap_exceeded,
           "cannot certify square-class independence: composite leftover " + d.str());
    }
  }
  return support;
}

Int support_to_squarefree(const std::set<Int>& support) {
  Int d = 1;
  for (const Int& p : support) d *= p;
  return d;
}

} // namespace

std::string SplittingFieldInfo::str() const {
  switch (kind) {
    case Kind::rational: return "Q";
    case Kind::multiquadratic: {
      std::ostringstream out;
      out << "Q(";
      for (size_t i = 0; i < discriminants.size(); ++i) {
        if (i) out << ", ";
        out << "sqrt(" << discriminants[i].str() << ")";
      }
      out << ")";
      return out.str();
    }
    case Kind::partial: {
      std::ostringstream out;
      out << "degree >= " << degree << " (irreducible factor " << witness.str() << ")";
      return out.str();
    }
  }
  fail(errc::internal, "bad field kind");
}

SplittingFieldInfo splitting_field_from_factors(
    const std::vector<std::pair<IntPoly, int>>& factors) {
  SplittingFieldInfo info;
  int max_deg = 0;
  std::vector<Int> discs;
  for (const auto& [f, mult] : factors) {
    (void)mult;
    int d = f.degree();
    require(d >= 1, "constant factor in factorization");
    if (d > max_deg) {
      max_deg = d;
      if (d >= 3) info.witness = f;
    }
    if (d == 2) {
      // monic x^2 + bx + c -> discriminant b^2 - 4c
      check_internal(f.is_monic(), "factors must be monic");
      discs.push_back(f[1] * f[1] - 4 * f[0]);
    }
  }

  // Echelon basis of the square classes over GF(2) (coordinates: -1 and the
  // odd-exponent primes).  Deterministic: discriminants processed in sorted
  // square-class order, pivot = smallest coordinate, fully reduced at the end.
  std::vector<std::set<Int>> classes;
  for (const Int& d : discs) classes.push_back(square_class_support(d));
  std::sort(classes.begin(), classes.end(),
            [](const std::set<Int>& a, const std::set<Int>& b) {
              return support_to_squarefree(a) < support_to_squarefree(b);
            });
  auto symmetric_difference = [](const std::set<Int>& a, const std::set<Int>& b) {
    std::set<Int> out;
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                  std::inserter(out, out.begin()));
    return out;
  };
  std::vector<std::set<Int>> basis; // each row's pivot = *row.begin()
  for (auto v : classes) {
    for (const auto& row : basis)
      if (v.count(*row.begin())) v = symmetric_difference(v, row);
    if (!v.empty()) basis.push_back(std::move(v));
  }
  std::sort(basis.begin(), basis.end(),
            [](const std::set<Int>& a, const std::set<Int>& b) { return *a.begin() < *b.begin(); });
  for (size_t i = 0; i < basis.size(); ++i)
    for (size_t j = 0; j < basis.size(); ++j)
      if (i != j && basis[j].count(*basis[i].begin()))
        basis[j] = symmetric_difference(basis[j], basis[i]);
  for (const auto& row : basis) info.discriminants.push_back(support_to_squarefree(row));
  std::sort(info.discriminants.begin(), info.discriminants.end());

  long rank = static_cast<long>(basis.size());
  if (max_deg >= 3) {
    info.kind = SplittingFieldInfo::Kind::partial;
    info.degree = max_deg;
    info.lower_bound = true;
  } else if (rank == 0) {
    info.kind = SplittingFieldInfo::Kind::rational;
    info.degree = 1;
  } else {
    info.kind = SplittingFieldInfo::Kind::multiquadratic;
    require(rank < 62, "square-class rank too large");
    info.degree = 1L << rank;
  }
  return info;
}

SplittingFieldInfo splitting_field_of(const Graph& g) {
  IntPoly p = char_poly(g);
  IntPoly sf = squarefree_part(p);
  return splitting_field_from_factors(factor_over_Z(sf));
}

long distinct_eigenvalue_count(const Graph& g) {
  return squarefree_part(char_poly(g)).degree();
}

TwoIntegralCertificate is_2_integral(const Graph& g) {
  SplittingFieldInfo info = splitting_field_of(g);
  TwoIntegralCertificate cert;
  cert.two_integral = info.two_integral();
  if (cert.two_integral) {
    check_internal(info.discriminants.size() == 1, "degree 2 needs exactly one discriminant");
    cert.discriminant = info.discriminants[0];
    cert.reason = "splitting field Q(sqrt(" + cert.discriminant.str() + "))";
  } else if (info.kind == SplittingFieldInfo::Kind::partial) {
    cert.witness = info.witness;
    cert.reason = "irreducible characteristic factor of degree " +
                  std::to_string(info.witness.degree());
  } else if (info.kind == SplittingFieldInfo::Kind::rational) {
    cert.reason = "integral (degree 1)";
  } else {
    cert.reason = "multiquadratic of degree " + std::to_string(info.degree);
  }
  return cert;
}

CharacterTable abelian_characters(const FiniteGroup& G) {
  require(G.abelian, "character table construction is for abelian groups");
  long m = G.exponent;
  int n = G.n;

  // Grow a subgroup chain {1} = H_0 < H_1 < ... = G; at each step adjoin the
  // least element g outside H and extend every character chi of H in the t
  // ways allowed by t*v = chi(g^t) mod m, t the relative order of g.
  std::vector<int> H = {0};
  std::vector<int> pos(n, -1);
  pos[0] = 0;
  std::vector<std::vector<long>> chars = {{0}}; // [character][H position]
  while (static_cast<int>(H.size()) < n) {
    int g = 0;
    while (g < n && pos[g] != -1) ++g;
    check_internal(g < n, "subgroup chain ran out of elements");
    long t = 1;
    int p = g;
    while (pos[p] == -1) {
      p = G.mul(p, g);
      ++t;
    }
    int anchor = pos[p]; // g^t lands at this H position
    size_t old_size = H.size();
    int gj = 0;
    for (long j = 1; j < t; ++j) {
      gj = G.mul(gj, g);
      for (size_t i = 0; i < old_size; ++i) {
        int e = G.mul(H[i], gj);
        check_internal(pos[e] == -1, "coset elements must be new");
        pos[e] = static_cast<int>(H.size());
        H.push_back(e);
      }
    }
    std::vector<std::vector<long>> next;
    next.reserve(chars.size() * t);
    for (const auto& chi : chars) {
      long c = chi[anchor]; // chi(g^t)
      check_internal(c % t == 0, "character extension solvability");
      for (long u = 0; u < t; ++u) {
        long v = (c / t + (m / t) * u) % m;
        std::vector<long> ext(H.size());
        for (size_t i = 0; i < old_size; ++i) ext[i] = chi[i];
        for (long j = 1; j < t; ++j)
          for (size_t i = 0; i < old_size; ++i)
            ext[j * old_size + i] = (chi[i] + j * v) % m;
        next.push_back(std::move(ext));
      }
    }
    chars = std::move(next);
  }
  check_internal(chars.size() == static_cast<size_t>(n), "character count equals group order");

  CharacterTable table;
  table.m = m;
  table.exponent.assign(n, std::vector<long>(n));
  for (int c = 0; c < n; ++c)
    for (int e = 0; e < n; ++e) table.exponent[c][e] = chars[c][pos[e]];

  // Homomorphism property on generator pairs and pairwise distinctness.
  std::vector<int> probes = G.gens.empty() ? std::vector<int>{0} : G.gens;
  for (int c = 0; c < n; ++c)
    for (int a : probes)
      for (int b = 0; b < n; ++b)
        check_internal(table.exponent[c][G.mul(a, b)] ==
                           (table.exponent[c][a] + table.exponent[c][b]) % m,
                       "characters are homomorphisms");
  std::set<std::vector<long>> distinct(table.exponent.begin(), table.exponent.end());
  check_internal(distinct.size() == static_cast<size_t>(n), "characters are pairwise distinct");
  return table;
}

std::vector<CyclotomicElement> eigenvalues_abelian(const FiniteGroup& G,
                                                   const std::vector<int>& S) {
  require(!S.empty(), "connection set is empty");
  for (int s : S) {
    require(s >= 0 && s < G.n, "connection set element out of range");
    require(s != 0, "connection set must not contain the identity");
  }
  CharacterTable table = abelian_characters(G);
  std::vector<CyclotomicElement> evs;
  evs.reserve(G.n);
  for (int c = 0; c < G.n; ++c) {
    CyclotomicElement lambda = CyclotomicElement::zero(table.m);
    for (int s : S) lambda += CyclotomicElement::root_of_unity(table.m, table.exponent[c][s]);
    evs.push_back(std::move(lambda));
  }
  // Trace check: the eigenvalue sum over all characters is |S| * n * [e in S] = 0.
  CyclotomicElement sum = CyclotomicElement::zero(table.m);
  for (const auto& ev : evs) sum += ev;
  check_internal(sum.is_zero(), "eigenvalues sum to the (zero) trace");
  return evs;
}

CharacterDegree algebraic_degree_characters(const FiniteGroup& G, const std::vector<int>& S) {
  std::vector<CyclotomicElement> all = eigenvalues_abelian(G, S);
  std::set<CyclotomicElement> distinct(all.begin(), all.end());

  long m = G.exponent;
  const UnitGroup& U = unit_group(m);
  CharacterDegree result;
  result.modulus = m;
  for (long k : U.elements) {
    bool fixes = true;
    for (const auto& ev : distinct)
      if (ev.galois_apply(k) != ev) {
        fixes = false;
        break;
      }
    if (fixes) result.stabilizer.push_back(k);
  }
  check_internal(euler_phi(m) % static_cast<long>(result.stabilizer.size()) == 0,
                 "stabilizer size divides phi(m)");
  result.degree = euler_phi(m) / static_cast<long>(result.stabilizer.size());

  bool quadratic_orbits = true;
  for (const auto& ev : distinct)
    if (ev.orbit_size_under(U.elements) > 2) {
      quadratic_orbits = false;
      break;
    }
  if (quadratic_orbits) {
    std::set<IntPoly, bool (*)(const IntPoly&, const IntPoly&)> polys(
        +[](const IntPoly& a, const IntPoly& b) { return a.coeffs() < b.coeffs(); });
    for (const auto& ev : distinct) polys.insert(minimal_polynomial(ev));
    std::vector<std::pair<IntPoly, int>> factors;
    for (const auto& f : polys) factors.emplace_back(f, 1);
    SplittingFieldInfo info = splitting_field_from_factors(factors);
    check_internal(info.degree == result.degree && !info.lower_bound,
                   "character field degree matches stabilizer degree");
    result.field = std::move(info);
  }
  return result;
}

} // namespace caydeg
