#include "caydeg/factor.hpp"
#include "caydeg/numbers.hpp"

#include <algorithm>
#include <random>

namespace caydeg {

namespace {

// ---------------------------------------------------------------------------
// Polynomial arithmetic modulo a small odd prime p (coefficients in [0, p)).
// Dense, low-degree-first, trailing zeros trimmed.
// ---------------------------------------------------------------------------

using PolyP = std::vector<long>;

struct ModP {
  long p;

  long mul(long a, long b) const { return long((__int128)a * b % p); }
  long add(long a, long b) const { long s = a + b; return s >= p ? s - p : s; }
  long sub(long a, long b) const { long s = a - b; return s < 0 ? s + p : s; }
  long pow(long a, long e) const {
    long r = 1 % p;
    while (e > 0) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  long inv(long a) const { return pow(a, p - 2); }

  static void trim(PolyP& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
  }
  static int deg(const PolyP& f) { return int(f.size()) - 1; }

  PolyP reduce(const IntPoly& f) const {
    PolyP r(f.coeffs().size());
    for (size_t i = 0; i < r.size(); ++i) {
      Int c = f[int(i)] % p;
      if (c < 0) c += p;
      r[i] = long(c);
    }
    trim(r);
    return r;
  }

  PolyP mul(const PolyP& a, const PolyP& b) const {
    if (a.empty() || b.empty()) return {};
    PolyP c(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
      if (a[i] == 0) continue;
      for (size_t j = 0; j < b.size(); ++j)
        c[i + j] = long(((__int128)a[i] * b[j] + c[i + j]) % p);
    }
    trim(c);
    return c;
  }

  PolyP add(const PolyP& a, const PolyP& b) const {
    PolyP c(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < a.size(); ++i) c[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) c[i] = add(c[i], b[i]);
    trim(c);
    return c;
  }

  PolyP sub(const PolyP& a, const PolyP& b) const {
    PolyP c(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < a.size(); ++i) c[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) c[i] = sub(c[i], b[i]);
    trim(c);
    return c;
  }

  // Remainder of a modulo b (b nonzero, any leading coefficient).
  PolyP rem(PolyP a, const PolyP& b) const {
    check_internal(!b.empty(), "mod-p division by zero polynomial");
    long li = inv(b.back());
    int db = deg(b);
    while (deg(a) >= db) {
      long q = mul(a.back(), li);
      int shift = deg(a) - db;
      for (int i = 0; i <= db; ++i) a[shift + i] = sub(a[shift + i], mul(q, b[i]));
      trim(a);
    }
    return a;
  }

  // Exact quotient a / b (requires rem(a, b) == 0).
  PolyP div(PolyP a, const PolyP& b) const {
    check_internal(!b.empty(), "mod-p division by zero polynomial");
    long li = inv(b.back());
    int db = deg(b);
    if (deg(a) < db) {
      check_internal(a.empty(), "mod-p division not exact");
      return {};
    }
    PolyP q(deg(a) - db + 1, 0);
    while (deg(a) >= db) {
      long c = mul(a.back(), li);
      int shift = deg(a) - db;
      q[shift] = c;
      for (int i = 0; i <= db; ++i) a[shift + i] = sub(a[shift + i], mul(c, b[i]));
      trim(a);
    }
    check_internal(a.empty(), "mod-p division not exact");
    return q;
  }

  PolyP monic(PolyP f) const {
    if (f.empty()) return f;
    long li = inv(f.back());
    for (long& c : f) c = mul(c, li);
    return f;
  }

  PolyP gcd(PolyP a, PolyP b) const {
    while (!b.empty()) {
      PolyP r = rem(a, b);
      a = std::move(b);
      b = std::move(r);
    }
    return monic(a);
  }

  PolyP derivative(const PolyP& f) const {
    if (f.size() <= 1) return {};
    PolyP d(f.size() - 1);
    for (size_t i = 1; i < f.size(); ++i) d[i - 1] = long((__int128)f[i] * (i % p) % p);
    trim(d);
    return d;
  }

  // base^e mod f, with a big-integer exponent.
  PolyP powmod(PolyP base, Int e, const PolyP& f) const {
    PolyP r = {1 % p};
    base = rem(std::move(base), f);
    while (e > 0) {
      if ((e & 1) != 0) r = rem(mul(r, base), f);
      base = rem(mul(base, base), f);
      e >>= 1;
    }
    return r;
  }

  // Extended gcd for coprime monic g, h: returns (s, t) with s*g + t*h = 1.
  std::pair<PolyP, PolyP> xgcd_coprime(const PolyP& g, const PolyP& h) const {
    PolyP r0 = g, r1 = h;
    PolyP s0 = {1}, s1 = {};
    PolyP t0 = {}, t1 = {1};
    while (!r1.empty()) {
      // Quotient of r0 by r1.
      PolyP a = r0, q(std::max<size_t>(1, r0.size()), 0);
      long li = inv(r1.back());
      int db = deg(r1);
      while (deg(a) >= db) {
        long c = mul(a.back(), li);
        int shift = deg(a) - db;
        q[shift] = c;
        for (int i = 0; i <= db; ++i) a[shift + i] = sub(a[shift + i], mul(c, r1[i]));
        trim(a);
      }
      trim(q);
      r0 = std::move(r1);
      r1 = std::move(a);
      PolyP ns = sub(s0, mul(q, s1));
      PolyP nt = sub(t0, mul(q, t1));
      s0 = std::move(s1); s1 = std::move(ns);
      t0 = std::move(t1); t1 = std::move(nt);
    }
    check_internal(deg(r0) == 0, "xgcd: inputs not coprime mod p");
    long li = inv(r0[0]);
    for (long& c : s0) c = mul(c, li);
    for (long& c : t0) c = mul(c, li);
    return {s0, t0};
  }
};

// ---------------------------------------------------------------------------
// Factorization of a monic squarefree polynomial mod p (p odd).
// ---------------------------------------------------------------------------

void equal_degree_split(const ModP& zp, const PolyP& g, int d, std::mt19937_64& rng,
                        std::vector<PolyP>& out) {
  if (ModP::deg(g) == d) {
    out.push_back(g);
    return;
  }
  Int half = (pow(Int(zp.p), unsigned(d)) - 1) / 2;
  std::uniform_int_distribution<long> coef(0, zp.p - 1);
  for (;;) {
    PolyP t(size_t(ModP::deg(g)), 0);
    for (long& c : t) c = coef(rng);
    ModP::trim(t);
    if (ModP::deg(t) < 1) continue;
    PolyP h = zp.gcd(g, t);
    if (ModP::deg(h) == 0) {
      h = zp.powmod(t, half, g);
      if (h.empty()) continue;
      h[0] = zp.sub(h[0], 1);
      ModP::trim(h);
      h = zp.gcd(g, h);
    }
    if (ModP::deg(h) > 0 && ModP::deg(h) < ModP::deg(g)) {
      equal_degree_split(zp, h, d, rng, out);
      equal_degree_split(zp, zp.div(g, h), d, rng, out);
      return;
    }
  }
}

std::vector<PolyP> factor_squarefree_modp(const ModP& zp, const PolyP& f) {
  std::mt19937_64 rng(0x9e3779b97f4a7c15ull ^ (unsigned long long)zp.p);
  std::vector<PolyP> out;
  PolyP v = zp.monic(f);
  PolyP x = {0, 1};
  PolyP h = zp.rem(x, v);
  int d = 0;
  while (ModP::deg(v) >= 2 * (d + 1)) {
    ++d;
    h = zp.powmod(h, Int(zp.p), v);
    PolyP hx = zp.sub(h, x);
    PolyP g = zp.gcd(v, hx);
    if (ModP::deg(g) > 0) {
      equal_degree_split(zp, g, d, rng, out);
      v = zp.div(v, g);
      h = zp.rem(std::move(h), v);
    }
  }
  if (ModP::deg(v) > 0) out.push_back(v);
  // Deterministic order regardless of the RNG path.
  std::sort(out.begin(), out.end(), [](const PolyP& a, const PolyP& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  });
  return out;
}

// ---------------------------------------------------------------------------
// Polynomial arithmetic modulo a big prime power P (coefficients in [0, P)).
// ---------------------------------------------------------------------------

using PolyM = std::vector<Int>;

struct ModM {
  Int P;

  Int norm(Int a) const {
    a %= P;
    if (a < 0) a += P;
    return a;
  }
  static void trim(PolyM& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
  }
  static int deg(const PolyM& f) { return int(f.size()) - 1; }

  PolyM lift(const PolyP& f) const {
    PolyM r(f.size());
    for (size_t i = 0; i < f.size(); ++i) r[i] = norm(Int(f[i]));
    trim(r);
    return r;
  }
  PolyM reduce(const IntPoly& f) const {
    PolyM r(f.coeffs().size());
    for (size_t i = 0; i < r.size(); ++i) r[i] = norm(f[int(i)]);
    trim(r);
    return r;
  }

  PolyM mul(const PolyM& a, const PolyM& b) const {
    if (a.empty() || b.empty()) return {};
    PolyM c(a.size() + b.size() - 1, Int(0));
    for (size_t i = 0; i < a.size(); ++i) {
      if (a[i] == 0) continue;
      for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    }
    for (Int& v : c) v = norm(v);
    trim(c);
    return c;
  }

  PolyM add(const PolyM& a, const PolyM& b) const {
    PolyM c(std::max(a.size(), b.size()), Int(0));
    for (size_t i = 0; i < a.size(); ++i) c[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) c[i] = norm(c[i] + b[i]);
    trim(c);
    return c;
  }

  PolyM sub(const PolyM& a, const PolyM& b) const {
    PolyM c(std::max(a.size(), b.size()), Int(0));
    for (size_t i = 0; i < a.size(); ++i) c[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) c[i] = norm(c[i] - b[i]);
    trim(c);
    return c;
  }

  // divmod by a monic divisor.
  std::pair<PolyM, PolyM> divmod(PolyM a, const PolyM& b) const {
    check_internal(!b.empty() && b.back() == 1, "mod-P division needs monic divisor");
    int db = deg(b);
    if (deg(a) < db) return {{}, std::move(a)};
    PolyM q(deg(a) - db + 1, Int(0));
    while (deg(a) >= db) {
      Int c = a.back();
      int shift = deg(a) - db;
      q[shift] = c;
      for (int i = 0; i <= db; ++i) a[shift + i] = norm(a[shift + i] - c * b[i]);
      trim(a);
    }
    trim(q);
    return {std::move(q), std::move(a)};
  }
};

// One quadratic Hensel step: given f = g*h (mod m) and s*g + t*h = 1 (mod m)
// with g, h monic, produce the same data modulo m^2.
struct HenselPair {
  PolyM g, h, s, t;
};

HenselPair hensel_step(const PolyM& f, const HenselPair& in, const Int& m) {
  ModM zm{m * m};
  PolyM g = in.g, h = in.h, s = in.s, t = in.t;
  for (Int& c : g) c = zm.norm(c);
  for (Int& c : h) c = zm.norm(c);
  for (Int& c : s) c = zm.norm(c);
  for (Int& c : t) c = zm.norm(c);
  ModM::trim(g); ModM::trim(h); ModM::trim(s); ModM::trim(t);

  PolyM fr = f;
  for (Int& c : fr) c = zm.norm(c);
  ModM::trim(fr);

  PolyM e = zm.sub(fr, zm.mul(g, h));
  auto [q, r] = zm.divmod(zm.mul(s, e), h);
  PolyM gs = zm.add(g, zm.add(zm.mul(t, e), zm.mul(q, g)));
  PolyM hs = zm.add(h, r);

  PolyM b = zm.sub(zm.add(zm.mul(s, gs), zm.mul(t, hs)), PolyM{Int(1)});
  auto [c, d] = zm.divmod(zm.mul(s, b), hs);
  PolyM ss = zm.sub(s, d);
  PolyM ts = zm.sub(t, zm.add(zm.mul(t, b), zm.mul(c, gs)));

  check_internal(!hs.empty() && hs.back() == 1, "hensel step lost monicity of h");
  check_internal(!gs.empty() && gs.back() == 1, "hensel step lost monicity of g");
  return {std::move(gs), std::move(hs), std::move(ss), std::move(ts)};
}

// Lift the factorization f = prod(parts) (mod p) to modulus P = p^e >= target,
// recursively splitting the factor list in half.  f has coefficients mod P.
void hensel_tree(const ModM& zP, const PolyM& f, const ModP& zp,
                 const std::vector<PolyP>& parts, long p, std::vector<PolyM>& out) {
  if (parts.size() == 1) {
    out.push_back(f);
    return;
  }
  size_t halfn = parts.size() / 2;
  std::vector<PolyP> left(parts.begin(), parts.begin() + halfn);
  std::vector<PolyP> right(parts.begin() + halfn, parts.end());
  PolyP g0 = {1 % p}, h0 = {1 % p};
  for (const PolyP& q : left) g0 = zp.mul(g0, q);
  for (const PolyP& q : right) h0 = zp.mul(h0, q);
  auto [s0, t0] = zp.xgcd_coprime(g0, h0);

  HenselPair cur{ModM{zP.P}.lift(g0), ModM{zP.P}.lift(h0), ModM{zP.P}.lift(s0),
                 ModM{zP.P}.lift(t0)};
  // Re-normalize the starting data mod p (lift() above used mod P; same values).
  Int m(p);
  while (m < zP.P) {
    cur = hensel_step(f, cur, m);
    m *= m;
  }
  PolyM g = cur.g, h = cur.h;
  for (Int& c : g) c = zP.norm(c);
  for (Int& c : h) c = zP.norm(c);
  ModM::trim(g);
  ModM::trim(h);
  check_internal(zP.sub(f, zP.mul(g, h)).empty(), "hensel tree: f != g*h mod P");
  hensel_tree(zP, g, zp, left, p, out);
  hensel_tree(zP, h, zp, right, p, out);
}

// ---------------------------------------------------------------------------
// Zassenhaus on a monic squarefree polynomial.
// ---------------------------------------------------------------------------

IntPoly centered(const PolyM& f, const Int& P) {
  std::vector<Int> c(f.size());
  Int half = P / 2;
  for (size_t i = 0; i < f.size(); ++i) c[i] = f[i] > half ? f[i] - P : f[i];
  return IntPoly(std::move(c));
}

// Does the monic polynomial d divide f exactly over Z?
bool divides_exactly(const IntPoly& f, const IntPoly& d, IntPoly* quotient) {
  if (d.degree() > f.degree()) return false;
  std::vector<Int> a = f.coeffs();
  int dd = d.degree();
  std::vector<Int> q(size_t(f.degree() - dd + 1), Int(0));
  for (int i = int(a.size()) - 1; i >= dd; --i) {
    Int c = a[size_t(i)];
    if (c == 0) continue;
    q[size_t(i - dd)] = c;
    for (int j = 0; j <= dd; ++j) a[size_t(i - dd + j)] -= c * d[j];
  }
  for (const Int& c : a)
    if (c != 0) return false;
  if (quotient) *quotient = IntPoly(std::move(q));
  return true;
}

std::vector<IntPoly> zassenhaus(const IntPoly& f) {
  int n = f.degree();
  check_internal(f.is_monic(), "zassenhaus expects a monic polynomial");
  if (n == 1) return {f};

  // Choose the smallest odd prime at which f stays squarefree.
  long p = 0;
  for (long cand = 3;; cand += 2) {
    if (!is_prime(cand)) continue;
    ModP zp{cand};
    PolyP fbar = zp.reduce(f);
    if (ModP::deg(fbar) != n) continue; // cannot happen for monic f, kept for safety
    if (ModP::deg(zp.gcd(fbar, zp.derivative(fbar))) == 0) {
      p = cand;
      break;
    }
    check_internal(cand < 1000000, "no squarefree prime found");
  }

  ModP zp{p};
  PolyP fbar = zp.reduce(f);
  std::vector<PolyP> modular = factor_squarefree_modp(zp, fbar);
  if (modular.size() == 1) return {f};

  // Coefficient bound for any monic factor of f, then the lifting target.
  Int b2 = f.norm2_squared();
  Int root = boost::multiprecision::sqrt(b2);
  while (root * root < b2) ++root;
  Int bound = (root + 1) << unsigned(n);
  Int target = 2 * bound + 1;
  Int P(p);
  while (P < target) P *= P;

  ModM zP{P};
  PolyM fP = zP.reduce(f);
  std::vector<PolyM> lifted;
  hensel_tree(zP, fP, zp, modular, p, lifted);
  check_internal(lifted.size() == modular.size(), "hensel tree factor count mismatch");

  // Subset recombination in increasing cardinality.
  std::vector<IntPoly> result;
  IntPoly remaining = f;
  std::vector<size_t> active(lifted.size());
  for (size_t i = 0; i < active.size(); ++i) active[i] = i;
  long iterations = 0;

  size_t card = 1;
  while (2 * card <= active.size()) {
    // Iterate subsets of `active` of size `card` via index combinations.
    std::vector<size_t> idx(card);
    for (size_t i = 0; i < card; ++i) idx[i] = i;
    bool found = false;
    for (;;) {
      if (++iterations > kRecombinationCap)
        fail(errc::cap_exceeded,
             "factor recombination exceeded iteration cap (2^20 subsets)");
      PolyM prod = {zP.norm(Int(1))};
      for (size_t i : idx) prod = zP.mul(prod, lifted[active[i]]);
      IntPoly cand = centered(prod, P);
      IntPoly quotient;
      if (divides_exactly(remaining, cand, &quotient)) {
        result.push_back(cand);
        remaining = quotient;
        std::vector<size_t> next;
        for (size_t i = 0, k = 0; i < active.size(); ++i) {
          if (k < idx.size() && idx[k] == i) { ++k; continue; }
          next.push_back(active[i]);
        }
        active = std::move(next);
        found = true;
        break;
      }
      // Advance the combination.
      size_t i = card;
      while (i > 0 && idx[i - 1] == active.size() - card + (i - 1)) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (size_t j = i; j < card; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!found) ++card;
  }
  if (remaining.degree() > 0) result.push_back(remaining);
  return result;
}

} // namespace

std::vector<std::pair<IntPoly, int>> factor_over_Z(const IntPoly& f) {
  require(f.degree() >= 1, "factor_over_Z needs degree >= 1");
  require(f.is_monic(), "factor_over_Z needs a monic polynomial");

  std::vector<std::pair<IntPoly, int>> out;
  for (const auto& [part, mult] : squarefree_decomposition(f)) {
    if (part.degree() == 0) continue;
    if (part.degree() > kFactorDegreeCap)
      fail(errc::cap_exceeded,
           "spectral path unavailable: squarefree part degree " +
               std::to_string(part.degree()) + " exceeds cap " +
               std::to_string(kFactorDegreeCap));
    for (const IntPoly& g : zassenhaus(part)) out.emplace_back(g, mult);
  }

  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
    const auto& ca = a.first.coeffs();
    const auto& cb = b.first.coeffs();
    return std::lexicographical_compare(ca.begin(), ca.end(), cb.begin(), cb.end());
  });

  IntPoly check = IntPoly::constant(1);
  for (const auto& [g, m] : out)
    for (int i = 0; i < m; ++i) check = check * g;
  check_internal(check == f, "factorization product mismatch");
  return out;
}

} // namespace caydeg
