#include "caydeg/numbers.hpp"

#include <algorithm>
#include <numeric>

namespace caydeg {

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::pair<long, long>> factorize(long n) {
  require(n >= 1, "factorize: n must be positive");
  std::vector<std::pair<long, long>> out;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    long a = 0;
    while (n % p == 0) n /= p, ++a;
    out.emplace_back(p, a);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::vector<long> divisors(long n) {
  std::vector<long> out;
  for (long d = 1; d * d <= n; ++d) {
    if (n % d) continue;
    out.push_back(d);
    if (d != n / d) out.push_back(n / d);
  }
  std::sort(out.begin(), out.end());
  return out;
}

long euler_phi(long n) {
  require(n >= 1, "euler_phi: n must be positive");
  long phi = n;
  for (auto [p, a] : factorize(n)) phi -= phi / p;
  return phi;
}

long powmod(long base, long exp, long mod) {
  require(mod >= 1 && exp >= 0, "powmod: bad arguments");
  unsigned __int128 acc = 1, b = ((base % mod) + mod) % mod;
  while (exp) {
    if (exp & 1) acc = acc * b % mod;
    b = b * b % mod;
    exp >>= 1;
  }
  return static_cast<long>(acc);
}

bool is_square(const Int& n) {
  if (n < 0) return false;
  Int r = boost::multiprecision::sqrt(n);
  return r * r == n;
}

Int squarefree_part(const Int& n) {
  if (n == 0) return 0;
  Int d = (n < 0) ? Int(-1) : Int(1);
  Int m = boost::multiprecision::abs(n);
  for (Int p = 2; p * p <= m && p < (1 << 20); ++p) {
    if (m % p != 0) continue;
    int a = 0;
    while (m % p == 0) m /= p, ++a;
    if (a & 1) d *= p;
  }
  // Leftover cofactor has no prime factor below 2^20; at our sizes it is 1, a
  // prime, a product of two distinct primes, or the square of a prime.
  if (m > 1) {
    if (is_square(m)) {
      // square of a prime: contributes nothing
    } else {
      require(m < (Int(1) << 124), "squarefree_part: operand too large to certify");
      d *= m;
    }
  }
  return d;
}

namespace {

// Primitive root mod odd prime power p^a, lifted later via CRT.
long primitive_root_mod_prime_power(long p, long a) {
  long pa = 1;
  for (long i = 0; i < a; ++i) pa *= p;
  auto fac = factorize(p - 1);
  long g = 2;
  for (;; ++g) {
    bool ok = true;
    for (auto [q, e] : fac)
      if (powmod(g, (p - 1) / q, p) == 1) { ok = false; break; }
    if (ok) break;
  }
  if (a == 1) return g;
  // g or g+p is a primitive root mod p^a (whichever avoids g^{p-1} = 1 mod p^2)
  long p2 = p * p;
  if (powmod(g % p2, p - 1, p2) == 1) g += p;
  return g % pa;
}

long crt_pair(long r1, long m1, long r2, long m2) {
  // assumes gcd(m1,m2)=1; returns x mod m1*m2 with x=r1 (m1), x=r2 (m2)
  long m = m1 * m2;
  for (long k = 0; k < m2; ++k) {
    long x = r1 + m1 * k;
    if (x % m2 == r2 % m2) return x % m;
  }
  fail(errc::internal, "crt_pair: no solution");
}

} // namespace

UnitGroup unit_group(long n) {
  require(n >= 1, "unit_group: modulus must be positive");
  UnitGroup U;
  U.modulus = n;
  for (long u = 0; u < n; ++u)
    if (std::gcd(u, n) == 1) U.elements.push_back(u);
  if (n == 1) U.elements = {0}; // the unit group mod 1 is trivial
  // local generators per prime power, CRT-lifted to be 1 mod the complement
  for (auto [p, a] : factorize(n)) {
    long pa = 1;
    for (long i = 0; i < a; ++i) pa *= p;
    long rest = n / pa;
    auto lift = [&](long g) {
      return rest == 1 ? g % n : crt_pair(g, pa, 1 % rest, rest);
    };
    if (p == 2) {
      if (a == 2) {
        U.gens.push_back(lift(3));
        U.orders.push_back(2);
      } else if (a >= 3) {
        U.gens.push_back(lift(pa - 1)); // -1
        U.orders.push_back(2);
        U.gens.push_back(lift(3));
        U.orders.push_back(pa / 4); // 2^{a-2}
      }
      // a == 1: trivial local factor
    } else {
      U.gens.push_back(lift(primitive_root_mod_prime_power(p, a)));
      U.orders.push_back(pa - pa / p);
    }
  }
  // discrete logs by enumerating all exponent tuples
  long r = static_cast<long>(U.gens.size());
  std::vector<long> e(r, 0);
  while (true) {
    unsigned __int128 v = 1 % n;
    for (long i = 0; i < r; ++i) v = v * powmod(U.gens[i], e[i], n) % n;
    U.log[static_cast<long>(v)] = e;
    long i = 0;
    for (; i < r; ++i) {
      if (++e[i] < U.orders[i]) break;
      e[i] = 0;
    }
    if (i == r) break;
  }
  check_internal(static_cast<long>(U.log.size()) == U.order(),
                 "unit_group: decomposition does not enumerate all units");
  return U;
}

std::vector<std::vector<long>> subgroups_of_index(const UnitGroup& U, long p) {
  require(is_prime(p), "subgroups_of_index: index must be prime");
  std::vector<long> pos; // cyclic factors whose order p divides
  for (size_t i = 0; i < U.orders.size(); ++i)
    if (U.orders[i] % p == 0) pos.push_back(static_cast<long>(i));
  long r = static_cast<long>(pos.size());
  std::vector<std::vector<long>> out;
  if (r == 0) return out; // no index-p subgroup in an abelian group with p ∤ |U|

  // Normalized nonzero functionals lambda in F_p^r (first nonzero entry = 1);
  // each kernel pulls back to one index-p subgroup.
  std::vector<long> lam(r, 0);
  auto emit = [&]() {
    std::vector<long> K;
    for (long u : U.elements) {
      const auto& e = U.log.at(u);
      long s = 0;
      for (long i = 0; i < r; ++i) s = (s + lam[i] * (e[pos[i]] % p)) % p;
      if (s == 0) K.push_back(u);
    }
    check_internal(static_cast<long>(K.size()) * p == U.order(),
                   "subgroups_of_index: kernel has wrong size");
    out.push_back(std::move(K));
  };
  for (long lead = 0; lead < r; ++lead) {
    std::fill(lam.begin(), lam.end(), 0);
    lam[lead] = 1;
    // free coordinates after `lead` range over all of F_p
    long free = r - lead - 1;
    std::vector<long> f(free, 0);
    while (true) {
      for (long i = 0; i < free; ++i) lam[lead + 1 + i] = f[i];
      emit();
      long i = 0;
      for (; i < free; ++i) {
        if (++f[i] < p) break;
        f[i] = 0;
      }
      if (i == free) break;
    }
  }
  long expect = 1;
  for (long i = 0; i < r; ++i) expect *= p;
  check_internal(static_cast<long>(out.size()) == (expect - 1) / (p - 1),
                 "subgroups_of_index: count mismatch");
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<long>> all_unit_subgroups(const UnitGroup& U) {
  long m = U.modulus;
  if (U.order() == 1) return {U.elements};
  auto closure = [&](std::vector<long> gens) {
    std::set<long> H = {1};
    std::vector<long> frontier = {1};
    while (!frontier.empty()) {
      std::vector<long> next;
      for (long h : frontier)
        for (long g : gens) {
          long x = (h * g) % m;
          if (H.insert(x).second) next.push_back(x);
        }
      frontier = std::move(next);
    }
    return std::vector<long>(H.begin(), H.end());
  };

  std::set<std::vector<long>> seen;
  seen.insert({1});
  for (long u : U.elements) seen.insert(closure({u}));
  // close under pairwise joins until stable
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::vector<long>> snapshot(seen.begin(), seen.end());
    for (size_t i = 0; i < snapshot.size(); ++i)
      for (size_t j = i + 1; j < snapshot.size(); ++j) {
        std::vector<long> gens = snapshot[i];
        gens.insert(gens.end(), snapshot[j].begin(), snapshot[j].end());
        if (seen.insert(closure(std::move(gens))).second) grew = true;
      }
  }
  std::vector<std::vector<long>> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  for (const auto& H : out)
    check_internal(U.order() % static_cast<long>(H.size()) == 0,
                   "subgroup order divides the unit-group order");
  return out;
}

} // namespace caydeg
