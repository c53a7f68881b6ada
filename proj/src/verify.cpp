#include "caydeg/verify.hpp"

#include "caydeg/factor.hpp"
#include "caydeg/graph.hpp"
#include "caydeg/numbers.hpp"
#include "caydeg/poly.hpp"
#include "caydeg/spectra.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>

namespace caydeg {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string entry_str(const FiniteGroup& G, const std::vector<int>& S) {
  return G.spec + " {" + set_to_words(G, S) + "}";
}

std::vector<std::string> sorted_diff(const std::vector<std::string>& a,
                                     const std::vector<std::string>& b) {
  std::vector<std::string> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

} // namespace

// ---------------------------------------------------------------------------
// Bounds
// ---------------------------------------------------------------------------

Int distinct_eigenvalue_bound(long k, long delta) {
  require(k >= 1, "distinct_eigenvalue_bound needs k >= 1 (got " + std::to_string(k) + ")");
  require(delta >= 0, "distinct_eigenvalue_bound needs delta >= 0");
  require(k <= 64, "distinct_eigenvalue_bound caps k at 64", errc::cap_exceeded);
  Int total = 0;
  for (long d : divisors(k)) {
    Int prod = 1;
    Int binom = 1; // C(d, j), updated incrementally
    Int dpow = 1;  // delta^j
    for (long j = 1; j <= d; ++j) {
      binom = binom * (d - j + 1) / j;
      dpow *= delta;
      prod *= 2 * binom * dpow + 1;
    }
    total += prod;
  }
  return total;
}

Int order_bound(long k, long delta) {
  Int f = distinct_eigenvalue_bound(k, delta);
  require(f - 1 <= 100000,
          "order_bound diameter " + f.str() + " - 1 exceeds the computable cap",
          errc::cap_exceeded);
  long D = static_cast<long>((f - 1).convert_to<long>());
  if (delta == 0) return 1;
  if (delta == 1) return 2;
  if (delta == 2) return 1 + 2 * D;
  Int t = boost::multiprecision::pow(Int(delta - 1), static_cast<unsigned>(D));
  return 1 + Int(delta) * (t - 1) / (delta - 2);
}

// ---------------------------------------------------------------------------
// Parallel helper
// ---------------------------------------------------------------------------

int default_worker_width() {
  if (const char* env = std::getenv("CAYDEG_WORKERS")) {
    int w = std::atoi(env);
    if (w >= 1 && w <= 64) return w;
  }
  return 1;
}

void parallel_chunks(long n, int width, const std::function<void(long)>& fn) {
  require(width >= 1, "worker width must be >= 1");
  if (n <= 0) return;
  if (width == 1 || n == 1) {
    for (long i = 0; i < n; ++i) fn(i);
    return;
  }
  width = static_cast<int>(std::min<long>(width, n));
  long chunk = (n + width - 1) / width;
  std::vector<std::thread> pool;
  std::exception_ptr first_error;
  std::mutex err_mu;
  for (int w = 0; w < width; ++w) {
    long lo = w * chunk;
    long hi = std::min(n, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([&, lo, hi] {
      try {
        for (long i = lo; i < hi; ++i) fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> g(err_mu);
        if (!first_error) first_error = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

// ---------------------------------------------------------------------------
// Abelian group enumeration and canonicalization
// ---------------------------------------------------------------------------

namespace {

// Invariant-factor sequences d1 | ... with d_{i+1} | d_i and product n.
void invariant_sequences(long n, long prev, std::vector<long>& cur,
                         std::vector<std::vector<long>>& out) {
  if (n == 1) {
    out.push_back(cur);
    return;
  }
  for (long d : divisors(n)) {
    if (d < 2) continue;
    if (prev != 0 && prev % d != 0) continue;
    cur.push_back(d);
    invariant_sequences(n / d, d, cur, out);
    cur.pop_back();
  }
}

std::string invariant_spec(const std::vector<long>& seq) {
  if (seq.empty()) return "Z1";
  std::string s;
  for (long d : seq) {
    if (!s.empty()) s += "x";
    s += "Z" + std::to_string(d);
  }
  return s;
}

} // namespace

std::vector<FiniteGroup> enumerate_abelian_groups(long max_order) {
  require(max_order >= 1, "max_order must be >= 1");
  require(max_order <= 200, "abelian enumeration caps the order at 200", errc::cap_exceeded);
  std::vector<FiniteGroup> out;
  for (long n = 1; n <= max_order; ++n) {
    std::vector<std::vector<long>> seqs;
    if (n == 1) {
      seqs.push_back({});
    } else {
      std::vector<long> cur;
      invariant_sequences(n, 0, cur, seqs);
    }
    std::sort(seqs.begin(), seqs.end(), std::greater<std::vector<long>>());
    for (const auto& seq : seqs) out.push_back(parse_group_spec(invariant_spec(seq)));
  }
  return out;
}

FiniteGroup canonical_abelian(const FiniteGroup& G, std::vector<int>* index_map) {
  require(G.abelian, "canonical form is defined for abelian groups (got " + G.spec + ")");
  if (G.n == 1) {
    if (index_map) *index_map = {0};
    return parse_group_spec("Z1");
  }
  require(!G.gens.empty() && G.words.size() == static_cast<size_t>(G.n),
          "canonical form needs word-backed generator slots");

  // Prime-power cyclic components of the generator slots.
  struct Comp {
    long p = 0;
    long q = 0;  // p^e
    int elem = 0; // generator of this component
  };
  std::vector<Comp> comps;
  long product = 1;
  for (size_t i = 0; i < G.gens.size(); ++i) {
    long o = G.gen_orders[i];
    product *= o;
    for (auto [p, e] : factorize(o)) {
      long q = 1;
      for (long t = 0; t < e; ++t) q *= p;
      comps.push_back({p, q, G.power(G.gens[i], o / q)});
    }
  }
  check_internal(product == G.n, "generator slots must decompose the whole group");

  // Invariant factors: greedily take the largest remaining component of each
  // prime; consumed components line up with the canonical slots.
  std::sort(comps.begin(), comps.end(), [](const Comp& a, const Comp& b) {
    if (a.p != b.p) return a.p < b.p;
    if (a.q != b.q) return a.q > b.q;
    return a.elem < b.elem;
  });
  std::vector<long> inv_factors;
  std::vector<std::vector<Comp>> layers;
  std::vector<Comp> pool = comps;
  while (!pool.empty()) {
    long d = 1;
    std::vector<Comp> layer;
    std::vector<Comp> rest;
    long cur_p = -1;
    for (const Comp& c : pool) {
      if (c.p != cur_p) {
        cur_p = c.p;
        d *= c.q;
        layer.push_back(c);
      } else {
        rest.push_back(c);
      }
    }
    inv_factors.push_back(d);
    layers.push_back(std::move(layer));
    pool = std::move(rest);
  }

  FiniteGroup C = parse_group_spec(invariant_spec(inv_factors));
  check_internal(C.n == G.n, "canonical group must have the same order");

  // Generator pairs (g in G, image in C), componentwise.
  std::vector<std::pair<int, int>> genpairs;
  for (size_t i = 0; i < layers.size(); ++i)
    for (const Comp& c : layers[i])
      genpairs.push_back({c.elem, C.power(C.gens[i], inv_factors[i] / c.q)});

  // Extend multiplicatively from the identity.
  std::vector<int> phi(G.n, -1);
  phi[0] = 0;
  std::vector<int> frontier = {0};
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int g : frontier)
      for (auto [a, b] : genpairs) {
        int u = G.mul(g, a);
        if (phi[u] == -1) {
          phi[u] = C.mul(phi[g], b);
          next.push_back(u);
        }
      }
    frontier = std::move(next);
  }

  std::vector<char> seen(C.n, 0);
  for (int g = 0; g < G.n; ++g) {
    check_internal(phi[g] >= 0, "canonical map must cover the group");
    check_internal(!seen[phi[g]], "canonical map must be injective");
    seen[phi[g]] = 1;
  }
  for (int a = 0; a < G.n; ++a)
    for (int b = 0; b < G.n; ++b)
      check_internal(phi[G.mul(a, b)] == C.mul(phi[a], phi[b]),
                     "canonical map must be a homomorphism");

  if (index_map) *index_map = phi;
  return C;
}

// ---------------------------------------------------------------------------
// Connection-set enumeration
// ---------------------------------------------------------------------------

void enumerate_connection_sets(const FiniteGroup& G, int valency, bool require_inverse_closed,
                               bool require_generating,
                               const std::function<bool(const std::vector<int>&)>& yield) {
  require(valency >= 1 && valency <= G.n - 1,
          "valency must lie in [1, |G|-1] (got " + std::to_string(valency) + " for " + G.spec +
              ")");
  if (!require_inverse_closed) {
    std::vector<int> S(valency);
    std::iota(S.begin(), S.end(), 1);
    while (true) {
      if (!require_generating || generates(G, S))
        if (!yield(S)) return;
      int i = valency - 1;
      while (i >= 0 && S[i] == G.n - valency + i) --i;
      if (i < 0) break;
      ++S[i];
      for (int j = i + 1; j < valency; ++j) S[j] = S[j - 1] + 1;
    }
    return;
  }

  // Inverse-closed sets are unions of involution singletons and {x, x^-1}
  // pairs; choosing blocks in ascending least-element order emits the sets in
  // lexicographic order (the first divergent block owns the least element of
  // the symmetric difference).
  struct Block {
    int least;
    int other; // -1 for involutions
  };
  std::vector<Block> blocks;
  for (int g = 1; g < G.n; ++g) {
    int h = G.inv(g);
    if (h == g)
      blocks.push_back({g, -1});
    else if (g < h)
      blocks.push_back({g, h});
  }

  std::vector<int> chosen;
  std::function<bool(size_t, int)> rec = [&](size_t idx, int remaining) -> bool {
    if (remaining == 0) {
      std::vector<int> S = chosen;
      std::sort(S.begin(), S.end());
      if (!require_generating || generates(G, S)) return yield(S);
      return true;
    }
    for (size_t i = idx; i < blocks.size(); ++i) {
      int size = blocks[i].other == -1 ? 1 : 2;
      if (size > remaining) continue;
      chosen.push_back(blocks[i].least);
      if (size == 2) chosen.push_back(blocks[i].other);
      bool keep = rec(i + 1, remaining - size);
      chosen.resize(chosen.size() - size);
      if (!keep) return false;
    }
    return true;
  };
  rec(0, valency);
}

std::vector<std::vector<int>> connection_sets(const FiniteGroup& G, int valency,
                                              bool require_inverse_closed,
                                              bool require_generating) {
  std::vector<std::vector<int>> out;
  enumerate_connection_sets(G, valency, require_inverse_closed, require_generating,
                            [&](const std::vector<int>& S) {
                              out.push_back(S);
                              return true;
                            });
  return out;
}

// ---------------------------------------------------------------------------
// Family expansion for the valency-3/4/5 classifications
// ---------------------------------------------------------------------------

namespace {

struct Expansion {
  std::map<std::string, FiniteGroup> groups; // canonical spec -> group
  struct Inst {
    std::string family;
    std::string spec; // canonical
    std::vector<int> set;
    bool positive; // 2-integral under the documented expansion convention
  };
  std::vector<Inst> instances;

  // natural spec -> (canonical spec, index map)
  std::map<std::string, std::pair<std::string, std::vector<int>>> canon_cache;

  void add(const std::string& family, const FiniteGroup& natural, const std::vector<int>& S,
           bool positive) {
    auto it = canon_cache.find(natural.spec);
    if (it == canon_cache.end()) {
      std::vector<int> map;
      FiniteGroup C = canonical_abelian(natural, &map);
      std::string cs = C.spec;
      groups.emplace(cs, std::move(C));
      it = canon_cache.emplace(natural.spec, std::make_pair(cs, std::move(map))).first;
    }
    std::vector<int> T;
    T.reserve(S.size());
    for (int s : S) T.push_back(it->second.second[s]);
    std::sort(T.begin(), T.end());
    check_internal(std::adjacent_find(T.begin(), T.end()) == T.end(),
                   "family set must map to distinct elements");
    instances.push_back({family, it->second.first, std::move(T), positive});
  }

  std::map<std::string, long> family_counts() const {
    std::map<std::string, long> c;
    for (const auto& i : instances) ++c[i.family];
    return c;
  }
};

// k-orbit data for the cyclic 4/5-valent families: pairs {k, n-k} of units,
// k in (1, n/2); positive exactly when k^2 = +-1 mod n (the proof's subgroup
// condition {1, -1, k, -k}).
std::vector<std::pair<long, bool>> unit_pair_reps(long n) {
  std::vector<std::pair<long, bool>> out;
  for (long k = 2; 2 * k < n; ++k) {
    if (std::gcd(k, n) != 1) continue;
    long kk = (k * k) % n;
    out.push_back({k, kk == 1 || kk == n - 1});
  }
  return out;
}

Expansion expand_G3() {
  Expansion E;
  for (long n : {8L, 10L, 12L}) {
    FiniteGroup Zn = build_cyclic(n);
    E.add("cyclic", Zn, {1, static_cast<int>(n / 2), static_cast<int>(n - 1)}, true);
    FiniteGroup P = parse_group_spec("Z" + std::to_string(n) + "xZ2");
    int x = P.parse_element("x");
    int y = P.parse_element("y");
    E.add("Z2-lift", P, {x, P.inv(x), y}, true);
  }
  return E;
}

const std::vector<std::pair<long, long>> kG4Pairs = {
    {3, 12}, {4, 8}, {4, 10}, {4, 12},  {6, 8},    {6, 10},
    {6, 12}, {5, 5}, {5, 10}, {8, 8},   {10, 10},  {12, 12}};

Expansion expand_G4() {
  Expansion E;
  for (long n : {15L, 16L, 20L, 24L, 30L}) {
    FiniteGroup Zn = build_cyclic(n);
    for (auto [k, valid] : unit_pair_reps(n))
      E.add("i", Zn,
            {1, static_cast<int>(k), static_cast<int>(n - k), static_cast<int>(n - 1)}, valid);
  }
  E.add("ii", build_cyclic(8), {1, 2, 6, 7}, true);
  E.add("iii", build_cyclic(10), {1, 2, 8, 9}, true);
  {
    FiniteGroup z12 = build_cyclic(12);
    E.add("iv", z12, {1, 2, 10, 11}, true);
    E.add("iv", z12, {1, 3, 9, 11}, true);
    E.add("iv", z12, {1, 4, 8, 11}, true);
  }
  for (long n : {8L, 10L, 12L}) {
    FiniteGroup P = parse_group_spec("Z" + std::to_string(n) + "xZ2");
    int x = P.parse_element("x");
    int y = P.parse_element("y");
    E.add("v", P, {x, P.inv(x), P.power(x, n / 2), y}, true);
  }
  for (long n : {5L, 8L, 10L, 12L}) {
    FiniteGroup P = parse_group_spec("Z" + std::to_string(n) + "xZ2^2");
    int x = P.parse_element("x");
    int y = P.parse_element("y");
    int z = P.parse_element("z");
    E.add("vi", P, {x, P.inv(x), y, z}, true);
  }
  for (auto [n, m] : kG4Pairs) {
    FiniteGroup P =
        parse_group_spec("Z" + std::to_string(n) + "xZ" + std::to_string(m));
    int x = P.parse_element("x");
    int y = P.parse_element("y");
    E.add("vii", P, {x, P.inv(x), y, P.inv(y)}, true);
  }
  return E;
}

Expansion expand_G5() {
  Expansion E;
  // i: cyclic, {x, x^-1, x^(n/2), x^k, x^-k}
  for (long n : {16L, 20L, 24L, 30L}) {
    FiniteGroup Zn = build_cyclic(n);
    for (auto [k, valid] : unit_pair_reps(n))
      E.add("i", Zn,
            {1, static_cast<int>(k), static_cast<int>(n / 2), static_cast<int>(n - k),
             static_cast<int>(n - 1)},
            valid);
  }
  E.add("ii", build_cyclic(8), {1, 2, 4, 6, 7}, true);
  E.add("iii", build_cyclic(10), {1, 2, 5, 8, 9}, true);
  {
    FiniteGroup z12 = build_cyclic(12);
    E.add("iv", z12, {1, 2, 6, 10, 11}, true);
    E.add("iv", z12, {1, 3, 6, 9, 11}, true);
    E.add("iv", z12, {1, 4, 6, 8, 11}, true);
  }
  // v: ZnxZ2, {x, x^-1, x^(n/2), y, x^(n/2) y}
  for (long n : {8L, 10L, 12L}) {
    FiniteGroup P = parse_group_spec("Z" + std::to_string(n) + "xZ2");
    int x = P.parse_element("x");
    int y = P.parse_element("y");
    int half = P.power(x, n / 2);
    E.add("v", P, {x, P.inv(x), half, y, P.mul(half, y)}, true);
  }
  // vi: ZnxZ2^2, {x, x^-1, y, z, s} for every involution s outside {y, z}
  for (long n : {5L, 8L, 10L, 12L}) {
    FiniteGroup P = parse_group_spec("Z" + std::to_string(n) + "xZ2^2");
    int x = P.parse_element("x");
    int y = P.parse_element("y");
    int z = P.parse_element("z");
    for (int s : involutions(P)) {
      if (s == y || s == z) continue;
      E.add("vi", P, {x, P.inv(x), y, z, s}, true);
    }
  }
  // vii: ZnxZm (pair list minus (5,5)), {x, x^-1, y, y^-1, s}, s any involution
  for (auto [n, m] : kG4Pairs) {
    if (n == 5 && m == 5) continue;
    FiniteGroup P =
        parse_group_spec("Z" + std::to_string(n) + "xZ" + std::to_string(m));
    int x = P.parse_element("x");
    int y = P.parse_element("y");
    for (int s : involutions(P)) E.add("vii", P, {x, P.inv(x), y, P.inv(y), s}, true);
  }
  // viii: ZnxZ2 lifts of family i
  for (long n : {16L, 20L, 24L, 30L}) {
    FiniteGroup P = parse_group_spec("Z" + std::to_string(n) + "xZ2");
    int x = P.parse_element("x");
    int y = P.parse_element("y");
    for (auto [k, valid] : unit_pair_reps(n))
      E.add("viii", P, {x, P.inv(x), P.power(x, k), P.power(x, n - k), y}, valid);
  }
  // ix-xi: ZnxZ2 lifts of ii-iv
  {
    FiniteGroup P = parse_group_spec("Z8xZ2");
    int x = P.parse_element("x");
    int y = P.parse_element("y");
    E.add("ix", P, {x, P.power(x, 2), P.power(x, 6), P.power(x, 7), y}, true);
  }
  {
    FiniteGroup P = parse_group_spec("Z10xZ2");
    int x = P.parse_element("x");
    int y = P.parse_element("y");
    E.add("x", P, {x, P.power(x, 2), P.power(x, 8), P.power(x, 9), y}, true);
  }
  {
    FiniteGroup P = parse_group_spec("Z12xZ2");
    int x = P.parse_element("x");
    int y = P.parse_element("y");
    for (auto base : {std::vector<long>{1, 2, 10, 11}, std::vector<long>{1, 3, 9, 11},
                      std::vector<long>{1, 4, 8, 11}}) {
      std::vector<int> S;
      for (long e : base) S.push_back(P.power(x, e));
      S.push_back(y);
      E.add("xi", P, S, true);
    }
  }
  // xii: ZnxZ2^2, {x, x^-1, x^(n/2), y, z}
  for (long n : {8L, 10L, 12L}) {
    FiniteGroup P = parse_group_spec("Z" + std::to_string(n) + "xZ2^2");
    int x = P.parse_element("x");
    int y = P.parse_element("y");
    int z = P.parse_element("z");
    E.add("xii", P, {x, P.inv(x), P.power(x, n / 2), y, z}, true);
  }
  // xiii: ZnxZ2^3, {x, x^-1, y, z, w}
  for (long n : {5L, 8L, 10L, 12L}) {
    FiniteGroup P = parse_group_spec("Z" + std::to_string(n) + "xZ2^3");
    int x = P.parse_element("x");
    int y = P.parse_element("y");
    int z = P.parse_element("z");
    int w = P.parse_element("w");
    E.add("xiii", P, {x, P.inv(x), y, z, w}, true);
  }
  // xiv: ZnxZmxZ2 (pair list minus (5,5)), {x, x^-1, y, y^-1, z}
  for (auto [n, m] : kG4Pairs) {
    if (n == 5 && m == 5) continue;
    FiniteGroup P = parse_group_spec("Z" + std::to_string(n) + "xZ" + std::to_string(m) + "xZ2");
    int x = P.parse_element("x");
    int y = P.parse_element("y");
    int z = P.parse_element("z");
    E.add("xiv", P, {x, P.inv(x), y, P.inv(y), z}, true);
  }
  return E;
}

// Shared scan: verify every instance (positives 2-integral via at least two
// independent paths, literal-only instances not 2-integral), close positives
// under automorphisms inside the bound, scan everything underneath, diff.
VerificationReport run_family_scan(const std::string& name, int valency, long max_order,
                                   Expansion& E, std::vector<std::string> conventions) {
  auto t0 = Clock::now();
  VerificationReport R;
  R.theorem = name;
  R.search_space = "abelian groups of order <= " + std::to_string(max_order) +
                   ", inverse-closed generating sets of size " + std::to_string(valency);

  std::vector<std::string> violations;
  long long positives = 0;
  for (const auto& inst : E.instances) {
    const FiniteGroup& G = E.groups.at(inst.spec);
    std::string entry = entry_str(G, inst.set);
    DegreeResult d = algebraic_degree(G, inst.set, false);
    CharacterDegree cd = algebraic_degree_characters(G, inst.set);
    if (cd.degree != d.degree || d.lower_bound)
      violations.push_back("degree paths disagree on " + entry);
    bool is2 = d.degree == 2 && !d.lower_bound;
    if (inst.positive) {
      ++positives;
      if (!generates(G, inst.set))
        violations.push_back("family instance does not generate: " + entry);
      if (!is2) {
        violations.push_back("family " + inst.family + " instance not 2-integral: " + entry +
                             " (degree " + std::to_string(d.degree) + ")");
      } else if (G.n <= 120) {
        TwoIntegralCertificate c = is_2_integral(build_cayley(G, inst.set));
        if (!c.two_integral)
          violations.push_back("spectral path rejects family instance " + entry + ": " +
                               c.reason);
      }
    } else if (is2) {
      violations.push_back("literal-only instance unexpectedly 2-integral: " + entry);
    }
  }
  R.positives_checked = positives;

  std::map<std::string, std::vector<std::vector<int>>> aut_cache;
  std::set<std::string> expected;
  long above_bound = 0;
  for (const auto& inst : E.instances) {
    if (!inst.positive) continue;
    const FiniteGroup& G = E.groups.at(inst.spec);
    if (G.n > max_order) {
      ++above_bound;
      continue;
    }
    auto it = aut_cache.find(inst.spec);
    if (it == aut_cache.end()) it = aut_cache.emplace(inst.spec, abelian_automorphisms(G)).first;
    for (const auto& a : it->second) {
      std::vector<int> T;
      T.reserve(inst.set.size());
      for (int s : inst.set) T.push_back(a[s]);
      std::sort(T.begin(), T.end());
      expected.insert(entry_str(G, T));
    }
  }

  std::set<std::string> found;
  long long scanned = 0;
  for (const FiniteGroup& G : enumerate_abelian_groups(max_order)) {
    if (G.n - 1 < valency) continue;
    enumerate_connection_sets(G, valency, true, true, [&](const std::vector<int>& S) {
      ++scanned;
      DegreeResult d = degree_abelian_formula(G, S);
      if (d.degree == 2) {
        TwoIntegralCertificate c = is_2_integral(build_cayley(G, S));
        check_internal(c.two_integral,
                       "formula and spectra disagree at " + entry_str(G, S) + ": " + c.reason);
        found.insert(entry_str(G, S));
      }
      return true;
    });
  }
  R.sets_scanned = scanned;

  R.found.assign(found.begin(), found.end());
  R.expected.assign(expected.begin(), expected.end());
  R.missing = sorted_diff(R.expected, R.found);
  R.extra = sorted_diff(R.found, R.expected);
  R.match = violations.empty() && R.missing.empty() && R.extra.empty();

  R.notes = std::move(conventions);
  {
    std::ostringstream os;
    os << "family instances:";
    for (auto& [fam, cnt] : E.family_counts()) os << " " << fam << "=" << cnt;
    os << " (total " << E.instances.size() << ", positive " << positives << ")";
    R.notes.push_back(os.str());
  }
  if (above_bound)
    R.notes.push_back(std::to_string(above_bound) +
                      " positive instances lie above the scan bound; verified directly, "
                      "excluded from the found/expected diff");
  for (auto& v : violations) R.notes.push_back("VIOLATION: " + v);
  R.seconds = seconds_since(t0);
  return R;
}

} // namespace

// ---------------------------------------------------------------------------
// Classification scans
// ---------------------------------------------------------------------------

VerificationReport verify_G2(long max_n) {
  auto t0 = Clock::now();
  require(max_n >= 5 && max_n <= 300, "verify_G2 expects a bound in [5, 300]");
  VerificationReport R;
  R.theorem = "valency-2 classification";
  R.search_space =
      "circulants Z_n, 3 <= n <= " + std::to_string(max_n) + ", inverse-closed generating 2-sets";

  const std::set<long> expected_orders = {5, 8, 10, 12};
  std::set<std::string> found, expected;
  std::set<long> found_orders;
  long long scanned = 0;
  for (long n = 3; n <= max_n; ++n) {
    FiniteGroup G = build_cyclic(n);
    enumerate_connection_sets(G, 2, true, true, [&](const std::vector<int>& S) {
      ++scanned;
      DegreeResult d = degree_abelian_formula(G, S);
      if (d.degree == 2) {
        TwoIntegralCertificate c = is_2_integral(build_cayley(G, S));
        check_internal(c.two_integral, "formula and spectra disagree at " + entry_str(G, S));
        found.insert(entry_str(G, S));
        found_orders.insert(n);
      }
      if (expected_orders.count(n)) expected.insert(entry_str(G, S));
      return true;
    });
  }
  R.sets_scanned = scanned;
  R.found.assign(found.begin(), found.end());
  R.expected.assign(expected.begin(), expected.end());
  R.missing = sorted_diff(R.expected, R.found);
  R.extra = sorted_diff(R.found, R.expected);
  R.match = R.missing.empty() && R.extra.empty() && found_orders == expected_orders;

  {
    std::ostringstream os;
    os << "orders with a 2-integral circulant 2-set:";
    for (long n : found_orders) os << " " << n;
    R.notes.push_back(os.str());
  }
  // The one connected 2-regular abelian Cayley graph outside the circulants.
  {
    FiniteGroup K = parse_group_spec("Z2^2");
    std::vector<int> S = {K.parse_element("x"), K.parse_element("y")};
    std::sort(S.begin(), S.end());
    DegreeResult d = algebraic_degree(K, S, false);
    R.positives_checked = 1;
    std::ostringstream os;
    os << "non-cyclic sidebar: Z2xZ2 {x,y} is the 4-cycle, degree " << d.degree
       << " (integral, outside every positive)";
    R.notes.push_back(os.str());
    check_internal(d.degree == 1, "Z2xZ2 two-involution set must be integral");
  }
  R.seconds = seconds_since(t0);
  return R;
}

VerificationReport verify_G3(long max_order) {
  require(max_order >= 24 && max_order <= 200, "verify_G3 expects a bound in [24, 200]");
  Expansion E = expand_G3();
  return run_family_scan(
      "valency-3 classification", 3, max_order, E,
      {"claimed positives: Z_n {x, x^(n/2), x^-1} and Z_nxZ2 {x, x^-1, y} for n in {8, 10, 12}; "
       "six graphs up to isomorphism, compared as Aut-orbits of connection sets"});
}

VerificationReport verify_G4(long max_order) {
  require(max_order >= 30 && max_order <= 200, "verify_G4 expects a bound in [30, 200]");
  Expansion E = expand_G4();
  VerificationReport R = run_family_scan(
      "valency-4 classification", 4, max_order, E,
      {"family i expands over unit pairs {k, n-k}, 1 < k < n/2; an instance counts as a "
       "positive exactly when k^2 = +-1 (mod n), the subgroup condition the derivation uses",
       "literal family count follows the theorem's item list: one instance per unit pair"});
  R.notes.push_back("literal instance count (families i-vii): " +
                    std::to_string(E.instances.size()));
  return R;
}

VerificationReport verify_G5(long max_order) {
  require(max_order >= 20 && max_order <= 200, "verify_G5 expects a bound in [20, 200]");
  Expansion E = expand_G5();
  VerificationReport R = run_family_scan(
      "valency-5 classification", 5, max_order, E,
      {"families expanded with the documented corrections: the added fifth element in the "
       "two-generator families is an involution of the group (the stated letter does not "
       "exist there); family vi ranges over every involution outside the two Z2 generators",
       "family i/viii positives use the same k^2 = +-1 (mod n) convention as valency 4",
       "claimed total in the source theorem: 108 instances; the expansion above yields the "
       "count reported below (overlaps between families vi and xii are counted per family)"});
  return R;
}

// ---------------------------------------------------------------------------
// B_k membership
// ---------------------------------------------------------------------------

VerificationReport verify_Bk(const FiniteGroup& G, int k) {
  auto t0 = Clock::now();
  require(k >= 2, "B_k needs k >= 2");
  VerificationReport R;
  R.theorem = "B_" + std::to_string(k) + " membership of " + G.spec;
  R.search_space = "inverse-closed S, 1 not in S, 2 <= |S| <= " + std::to_string(k) +
                   ", ascending size then lexicographic";

  long long scanned = 0;
  std::vector<long long> per_size(static_cast<size_t>(k) + 1, 0);
  for (int v = 2; v <= k && !R.counterexample; ++v) {
    if (v > G.n - 1) break;
    enumerate_connection_sets(G, v, true, false, [&](const std::vector<int>& S) {
      ++scanned;
      ++per_size[v];
      DegreeResult d = algebraic_degree(G, S, false);
      if (d.lower_bound)
        check_internal(d.degree >= 3, "a lower bound below 3 cannot settle 2-integrality");
      if (d.degree != 2 || d.lower_bound) {
        BkCounterexample cx;
        cx.set = S;
        cx.words = set_to_words(G, S);
        cx.degree = d;
        std::vector<int> sub = generated_subgroup(G, S);
        std::vector<int> remap;
        FiniteGroup H = subgroup_group(G, sub, &remap);
        std::vector<int> T;
        for (int s : S) T.push_back(remap[s]);
        std::sort(T.begin(), T.end());
        IntPoly p = char_poly(build_cayley(H, T));
        for (auto& [f, mult] : factor_over_Z(squarefree_part(p))) {
          (void)mult;
          cx.factors.push_back(f);
        }
        R.counterexample = std::move(cx);
        return false;
      }
      return true;
    });
  }
  R.sets_scanned = scanned;
  if (R.counterexample) {
    const auto& cx = *R.counterexample;
    std::ostringstream os;
    os << G.spec << " {" << cx.words << "} degree "
       << (cx.degree.lower_bound ? ">= " : "") << cx.degree.degree << " via " << cx.degree.path;
    R.found.push_back(os.str());
    std::ostringstream fs;
    fs << "counterexample factors:";
    for (const auto& f : cx.factors) fs << " (" << f.str() << ")";
    R.notes.push_back(fs.str());
  }
  for (int v = 2; v <= k; ++v)
    R.notes.push_back("size " + std::to_string(v) + ": " + std::to_string(per_size[v]) +
                      " sets scanned");
  if (G.n % 2 == 1)
    R.notes.push_back("odd order: no involutions, so every odd size is empty");
  R.match = !R.counterexample;
  R.seconds = seconds_since(t0);
  return R;
}

namespace {

// Structural membership predicates for the two theorems, evaluated on the
// group itself so the instance lists stay honest.
bool b2_member_predicted(const FiniteGroup& G) {
  long a5 = 1;
  while (a5 * 5 <= G.n && G.n % (a5 * 5) == 0) a5 *= 5;
  long co = G.n / a5;
  if (co == 1 && a5 >= 5) return G.exponent == 5;
  if (co == 2 && a5 >= 5) {
    for (int g = 0; g < G.n; ++g)
      if (G.element_order(g) % 25 == 0) return false;
    return true;
  }
  return false;
}

bool b3_member_predicted(const FiniteGroup& G) {
  if (!b2_member_predicted(G)) return false;
  long a5 = 1;
  while (a5 * 5 <= G.n && G.n % (a5 * 5) == 0) a5 *= 5;
  long co = G.n / a5;
  if (co == 1) return true; // 5-group of exponent 5: no involutions at all
  // index-2 case: P5 x Z2 (the involution is central) or the dihedral D10
  for (int g : involutions(G))
    if (G.is_central(g)) return true;
  return G.n == 10 && !G.abelian;
}

struct MembershipCase {
  std::string spec;
  bool member;          // per the theorem
  bool witness_only;    // too large to scan: check the recorded witness set
  std::string witness;  // connection-set words (witness_only)
};

VerificationReport run_membership(const std::string& name, int k,
                                  const std::vector<MembershipCase>& cases) {
  auto t0 = Clock::now();
  VerificationReport R;
  R.theorem = name;
  R.search_space = "exhaustive B_" + std::to_string(k) +
                   " scans on the listed groups; order-250 groups via witness subgroups";
  const IntPoly quartic(std::vector<Int>{11, 0, -8, 0, 1}); // x^4 - 8x^2 + 11

  std::set<std::string> expected, found;
  for (const auto& mc : cases) {
    FiniteGroup G = parse_group_spec(mc.spec);
    bool predicted = k == 2 ? b2_member_predicted(G) : b3_member_predicted(G);
    check_internal(predicted == mc.member,
                   "theorem predicate disagrees with the recorded membership of " + mc.spec);
    expected.insert(mc.spec + (mc.member ? " in B" : " not in B") + std::to_string(k));

    bool observed_member;
    if (mc.witness_only) {
      std::vector<int> S = parse_connection_set(G, mc.witness);
      std::vector<int> sub = generated_subgroup(G, S);
      DegreeResult d = algebraic_degree(G, S, false);
      observed_member = d.degree == 2 && !d.lower_bound; // member would need this set 2-integral
      std::ostringstream os;
      os << mc.spec << " witness {" << mc.witness << "}: subgroup order " << sub.size()
         << ", degree " << (d.lower_bound ? ">= " : "") << d.degree;
      // the order-250 witnesses all land on the quartic sqrt(4+sqrt(5)) field
      std::vector<int> remap;
      FiniteGroup H = subgroup_group(G, sub, &remap);
      std::vector<int> T;
      for (int s : S) T.push_back(remap[s]);
      std::sort(T.begin(), T.end());
      bool has_quartic = false;
      for (auto& [f, mult] : factor_over_Z(squarefree_part(char_poly(build_cayley(H, T))))) {
        (void)mult;
        if (f.coeffs() == quartic.coeffs()) has_quartic = true;
      }
      os << (has_quartic ? "; characteristic factor x^4 - 8x^2 + 11 present" : "");
      check_internal(has_quartic,
                     "witness certificate must contain the quartic x^4 - 8x^2 + 11");
      R.notes.push_back(os.str());
      ++R.positives_checked;
    } else {
      VerificationReport run = verify_Bk(G, k);
      R.sets_scanned += run.sets_scanned;
      observed_member = run.match;
      if (run.counterexample) {
        std::ostringstream os;
        os << mc.spec << " first counterexample {" << run.counterexample->words << "} degree "
           << (run.counterexample->degree.lower_bound ? ">= " : "")
           << run.counterexample->degree.degree;
        R.notes.push_back(os.str());
        if (mc.spec == "GDih(Z5xZ5)" && k == 3) {
          bool has_quartic = false;
          for (const auto& f : run.counterexample->factors)
            if (f.coeffs() == quartic.coeffs()) has_quartic = true;
          check_internal(has_quartic,
                         "the GDih(Z5xZ5) counterexample certificate must contain "
                         "x^4 - 8x^2 + 11");
          R.notes.push_back("GDih(Z5xZ5) counterexample carries the factor x^4 - 8x^2 + 11");
        }
      } else {
        ++R.positives_checked;
      }
    }
    found.insert(mc.spec + (observed_member ? " in B" : " not in B") + std::to_string(k));
  }
  R.expected.assign(expected.begin(), expected.end());
  R.found.assign(found.begin(), found.end());
  R.missing = sorted_diff(R.expected, R.found);
  R.extra = sorted_diff(R.found, R.expected);
  R.match = R.missing.empty() && R.extra.empty();
  R.seconds = seconds_since(t0);
  return R;
}

} // namespace

VerificationReport verify_B2_theorem() {
  return run_membership(
      "B_2 membership (5-groups of exponent 5 and their index-2 extensions)", 2,
      {
          {"Z5", true, false, ""},
          {"Z10", true, false, ""},
          {"Z5xZ5", true, false, ""},
          {"G5", true, false, ""},
          {"D10", true, false, ""},
          {"GDih(Z5xZ5)", true, false, ""},
          {"Z4", false, false, ""},
          {"Z7", false, false, ""},
          {"Z8", false, false, ""},
          {"Z15", false, false, ""},
          {"Z25", false, false, ""},
          {"D6", false, false, ""},
          {"GDih(Z25)", false, false, ""},
      });
}

VerificationReport verify_B3_theorem() {
  return run_membership(
      "B_3 membership (5-groups of exponent 5, their central Z2 products, and D10)", 3,
      {
          {"Z5", true, false, ""},
          {"Z5xZ5", true, false, ""},
          {"G5", true, false, ""},
          {"Z10", true, false, ""},
          {"Z5xZ5xZ2", true, false, ""},
          {"D10", true, false, ""},
          {"Z4", false, false, ""},
          {"D6", false, false, ""},
          {"D8", false, false, ""},
          {"D14", false, false, ""},
          {"GDih(Z5xZ5)", false, false, ""},
          {"G250.1", false, true, "b*d,b^2*d,a*d"},
          {"G250.2", false, true, "b^4*d,a*b^3*d,a^4*b^3*d"},
      });
}

// ---------------------------------------------------------------------------
// Z20 worked example
// ---------------------------------------------------------------------------

VerificationReport verify_z20_example() {
  auto t0 = Clock::now();
  VerificationReport R;
  R.theorem = "Z20 orbit-set example";
  R.search_space = "the eight orbit sets of Z20 under its unit subgroups";

  FiniteGroup G = build_cyclic(20);
  struct Case {
    std::vector<int> set;
    long degree;
  };
  const std::vector<Case> cases = {
      {{1, 9, 11, 19}, 2}, {{3, 7, 13, 17}, 2}, {{2, 18}, 2},  {{6, 14}, 2},
      {{4, 16}, 2},        {{8, 12}, 2},        {{4, 8, 12, 16}, 1}, {{5, 15}, 1},
  };
  for (const auto& c : cases) {
    std::ostringstream os;
    os << entry_str(G, c.set) << " degree " << c.degree;
    R.expected.push_back(os.str());
    DegreeResult d = algebraic_degree(G, c.set, true);
    SplittingFieldInfo sf = splitting_field_of(build_cayley(G, c.set));
    check_internal(sf.degree == d.degree && !sf.lower_bound,
                   "spectral degree must agree on " + entry_str(G, c.set));
    if (c.degree == 2)
      check_internal(sf.discriminants == std::vector<Int>{5},
                     "every 2-integral Z20 orbit set lands in Q(sqrt(5))");
    std::ostringstream fs;
    fs << entry_str(G, c.set) << " degree " << d.degree;
    R.found.push_back(fs.str());
    ++R.positives_checked;
  }
  std::sort(R.expected.begin(), R.expected.end());
  std::sort(R.found.begin(), R.found.end());
  R.missing = sorted_diff(R.expected, R.found);
  R.extra = sorted_diff(R.found, R.expected);

  // d = 5 coset: the pointwise stabilizer is T_5 = {1, 9, 13, 17}; the only
  // inverse-closed choice of unit subgroup above it is the full unit group,
  // whose orbit {5, 15} is integral.
  std::vector<long> T5 = pointwise_stabilizer_units(20, 5);
  check_internal(T5 == std::vector<long>({1, 9, 13, 17}), "T_5 must be {1, 9, 13, 17}");
  UnitGroup U = unit_group(20);
  long qualifying = 0;
  for (const auto& K : all_unit_subgroups(U)) {
    if (!std::includes(K.begin(), K.end(), T5.begin(), T5.end())) continue;
    if (!std::binary_search(K.begin(), K.end(), 19L)) continue;
    ++qualifying;
    OrbitSetResult orb = orbit_set(20, 5, 5, K);
    check_internal(orb.degree.degree == 1, "the undirected d=5 orbit set must be integral");
    R.notes.push_back("d=5, K = full unit group: S = {" + set_to_words(G, orb.set) +
                      "}, integral");
  }
  check_internal(qualifying == 1, "exactly one inverse-closed unit subgroup contains T_5");
  R.notes.push_back("directed d=5 orbit (K = T_5 itself) has degree 2 but is not "
                    "inverse-closed; the example's undirected claim stands");

  R.match = R.missing.empty() && R.extra.empty();
  R.sets_scanned = static_cast<long long>(cases.size());
  R.seconds = seconds_since(t0);
  return R;
}

// ---------------------------------------------------------------------------
// Report rendering
// ---------------------------------------------------------------------------

std::string VerificationReport::str() const {
  std::ostringstream os;
  os << "[" << theorem << "]\n";
  os << "  search space: " << search_space << "\n";
  os << "  scanned " << sets_scanned << " sets, verified " << positives_checked
     << " instances directly, found " << found.size() << ", expected " << expected.size()
     << " (in bound)\n";
  os << "  verdict: " << (match ? "MATCH" : "MISMATCH") << (partial ? " (partial)" : "") << "\n";
  auto dump = [&os](const std::string& label, const std::vector<std::string>& v) {
    if (v.empty()) return;
    os << "  " << label << " (" << v.size() << "):\n";
    for (const auto& e : v) os << "    " << e << "\n";
  };
  dump("missing", missing);
  dump("extra", extra);
  for (const auto& n : notes) os << "  note: " << n << "\n";
  os << "  time: " << seconds << " s\n";
  return os.str();
}

} // namespace caydeg
