#include "caydeg/group.hpp"

#include <algorithm>
#include <cctype>
#include <cstring>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

namespace caydeg {

namespace {

// Product slots are renamed x, y, z, ...; generalized dihedral bases get
// a, b, c, ... (skipping e) with x reserved for the adjoined involution.
constexpr const char* kProductLetters = "xyzwvutsrqpo";
constexpr const char* kGdihLetters = "abcdfghijklm";

std::string word_to_string(const std::vector<std::string>& gen_names,
                           const std::vector<std::pair<int, int>>& w) {
  if (w.empty()) return "e";
  std::ostringstream os;
  bool first = true;
  for (auto [slot, e] : w) {
    if (!first) os << "*";
    first = false;
    os << gen_names.at(slot);
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

// Computes inverses, names, exponent and the abelian flag, then runs the
// axiom check.  Every builder funnels through here.
void finalize(FiniteGroup& G) {
  require(G.n >= 1, "group must be nonempty");
  require(G.n <= kGroupOrderCap,
          "group of order " + std::to_string(G.n) + " is too large (table cap " +
              std::to_string(kGroupOrderCap) + ")",
          errc::cap_exceeded);
  check_internal(G.table.size() == static_cast<size_t>(G.n) * G.n, "group table has wrong size");

  G.inverse.assign(G.n, -1);
  for (int g = 0; g < G.n; ++g) {
    for (int h = 0; h < G.n; ++h) {
      if (G.mul(g, h) == 0) {
        check_internal(G.mul(h, g) == 0, "one-sided inverse in group table");
        G.inverse[g] = h;
        break;
      }
    }
    check_internal(G.inverse[g] >= 0, "element without inverse in group table");
  }

  if (G.names.empty()) {
    check_internal(G.words.size() == static_cast<size_t>(G.n), "missing words for names");
    G.names.reserve(G.n);
    for (int g = 0; g < G.n; ++g) G.names.push_back(word_to_string(G.gen_names, G.words[g]));
  }
  check_internal(G.names.size() == static_cast<size_t>(G.n) && G.names[0] == "e",
                 "bad element name table");
  check_internal(std::set<std::string>(G.names.begin(), G.names.end()).size() ==
                     static_cast<size_t>(G.n),
                 "element names are not distinct");

  G.abelian = true;
  for (int g = 0; g < G.n && G.abelian; ++g)
    for (int h = g + 1; h < G.n; ++h)
      if (G.mul(g, h) != G.mul(h, g)) { G.abelian = false; break; }

  G.exponent = 1;
  for (int g = 0; g < G.n; ++g) G.exponent = std::lcm(G.exponent, static_cast<long>(G.element_order(g)));

  G.validate();
}

} // namespace

int FiniteGroup::power(int g, long e) const {
  int ord = element_order(g);
  long r = e % ord;
  if (r < 0) r += ord;
  int acc = 0;
  for (long i = 0; i < r; ++i) acc = mul(acc, g);
  return acc;
}

int FiniteGroup::element_order(int g) const {
  int acc = g, ord = 1;
  while (acc != 0) {
    acc = mul(acc, g);
    ++ord;
    check_internal(ord <= n, "element order exceeds group order");
  }
  return ord;
}

bool FiniteGroup::is_central(int g) const {
  for (int h = 0; h < n; ++h)
    if (mul(g, h) != mul(h, g)) return false;
  return true;
}

void FiniteGroup::validate() const {
  for (int g = 0; g < n; ++g) {
    check_internal(mul(0, g) == g && mul(g, 0) == g, "identity law fails");
    check_internal(mul(g, inverse[g]) == 0 && mul(inverse[g], g) == 0, "inverse law fails");
  }
  auto assoc = [&](int a, int b, int c) {
    check_internal(mul(mul(a, b), c) == mul(a, mul(b, c)), "associativity fails");
  };
  if (n <= kFullAxiomCheckCap) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        int ab = mul(a, b);
        const uint16_t* rowb = &table[static_cast<size_t>(b) * n];
        for (int c = 0; c < n; ++c)
          check_internal(mul(ab, c) == mul(a, rowb[c]), "associativity fails");
      }
  } else {
    for (int a : gens)
      for (int b = 0; b < n; ++b)
        for (int c : gens) {
          assoc(a, b, c);
          assoc(inverse[a], b, inverse[c]);
        }
    std::mt19937 rng(12345);
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int t = 0; t < 50000; ++t) assoc(pick(rng), pick(rng), pick(rng));
  }
}

int FiniteGroup::parse_element(const std::string& word) const {
  std::string w;
  for (char ch : word)
    if (!std::isspace(static_cast<unsigned char>(ch))) w += ch;
  require(!w.empty(), "empty element word");
  if (w == "e") return 0;

  // exact name match first (covers subgroup-carried names)
  for (int g = 0; g < n; ++g)
    if (names[g] == w) return g;

  // bare integer exponent: gen^k, cyclic groups only
  if (w[0] == '-' || std::isdigit(static_cast<unsigned char>(w[0]))) {
    size_t used = 0;
    long k = 0;
    try {
      k = std::stol(w, &used);
    } catch (const std::exception&) {
      fail(errc::validation, "cannot parse element \"" + word + "\"");
    }
    require(used == w.size(), "trailing characters in element \"" + word + "\"");
    require(tag == "cyclic",
            "integer element names are only defined over cyclic groups (got \"" + word +
                "\" over " + spec + ")");
    return static_cast<int>(((k % n) + n) % n);
  }

  // word in the printed generators: letter[^exp] repeated, '*' optional
  int acc = 0;
  size_t i = 0;
  while (i < w.size()) {
    if (w[i] == '*') { ++i; continue; }
    int slot = -1;
    for (size_t s = 0; s < gen_names.size(); ++s)
      if (gen_names[s].size() == 1 && gen_names[s][0] == w[i]) { slot = static_cast<int>(s); break; }
    require(slot >= 0, "unknown generator '" + std::string(1, w[i]) + "' at position " +
                           std::to_string(i) + " in element \"" + word + "\" over " + spec);
    ++i;
    long e = 1;
    if (i < w.size() && w[i] == '^') {
      ++i;
      size_t start = i;
      if (i < w.size() && w[i] == '-') ++i;
      while (i < w.size() && std::isdigit(static_cast<unsigned char>(w[i]))) ++i;
      require(i > start && !(i == start + 1 && w[start] == '-'),
              "expected exponent after '^' in element \"" + word + "\"");
      e = std::stol(w.substr(start, i - start));
    }
    acc = mul(acc, power(gens[slot], e));
  }
  return acc;
}

FiniteGroup build_cyclic(long n) {
  require(n >= 1, "cyclic group order must be positive");
  require(n <= kGroupOrderCap,
          "group of order " + std::to_string(n) + " is too large (table cap " +
              std::to_string(kGroupOrderCap) + ")",
          errc::cap_exceeded);
  FiniteGroup G;
  G.n = static_cast<int>(n);
  G.spec = "Z" + std::to_string(n);
  G.tag = "cyclic";
  G.table.resize(static_cast<size_t>(n) * n);
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j)
      G.table[i * n + j] = static_cast<uint16_t>((i + j) % n);
  G.words.resize(n);
  for (long i = 1; i < n; ++i) G.words[i] = {{0, static_cast<int>(i)}};
  if (n >= 2) {
    G.gen_names = {"a"};
    G.gens = {1};
    G.gen_orders = {static_cast<int>(n)};
  }
  finalize(G);
  return G;
}

FiniteGroup build_direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  require(a.words.size() == static_cast<size_t>(a.n) &&
              b.words.size() == static_cast<size_t>(b.n),
          "direct product factors must be word-backed constructions");
  long total = static_cast<long>(a.n) * b.n;
  require(total <= kGroupOrderCap,
          "direct product of order " + std::to_string(total) + " is too large (table cap " +
              std::to_string(kGroupOrderCap) + ")",
          errc::cap_exceeded);

  FiniteGroup G;
  G.n = static_cast<int>(total);
  G.spec = a.spec + "x" + b.spec;
  G.tag = "product";

  size_t slots = a.gen_names.size() + b.gen_names.size();
  require(slots <= std::strlen(kProductLetters), "too many generator slots to name");
  for (size_t i = 0; i < slots; ++i) G.gen_names.emplace_back(1, kProductLetters[i]);
  int shift = static_cast<int>(a.gen_names.size());
  for (int g : a.gens) G.gens.push_back(g * b.n);
  for (int g : b.gens) G.gens.push_back(g);
  G.gen_orders = a.gen_orders;
  G.gen_orders.insert(G.gen_orders.end(), b.gen_orders.begin(), b.gen_orders.end());

  G.table.resize(static_cast<size_t>(G.n) * G.n);
  for (int i1 = 0; i1 < a.n; ++i1)
    for (int j1 = 0; j1 < b.n; ++j1) {
      size_t row = static_cast<size_t>(i1 * b.n + j1) * G.n;
      for (int i2 = 0; i2 < a.n; ++i2)
        for (int j2 = 0; j2 < b.n; ++j2)
          G.table[row + i2 * b.n + j2] =
              static_cast<uint16_t>(a.mul(i1, i2) * b.n + b.mul(j1, j2));
    }

  G.words.resize(G.n);
  for (int i = 0; i < a.n; ++i)
    for (int j = 0; j < b.n; ++j) {
      auto& w = G.words[i * b.n + j];
      w = a.words[i];
      for (auto [slot, e] : b.words[j]) w.emplace_back(slot + shift, e);
    }

  finalize(G);
  return G;
}

FiniteGroup build_generalized_dihedral(const FiniteGroup& a) {
  require(a.abelian, "generalized dihedral base must be abelian (got " + a.spec + ")");
  require(a.words.size() == static_cast<size_t>(a.n),
          "generalized dihedral base must be a word-backed construction");
  long total = 2L * a.n;
  require(total <= kGroupOrderCap,
          "generalized dihedral group of order " + std::to_string(total) +
              " is too large (table cap " + std::to_string(kGroupOrderCap) + ")",
          errc::cap_exceeded);

  FiniteGroup G;
  G.n = static_cast<int>(total);
  G.spec = "GDih(" + a.spec + ")";
  G.tag = "gdih";

  size_t base_slots = a.gen_names.size();
  require(base_slots <= std::strlen(kGdihLetters), "too many generator slots to name");
  for (size_t i = 0; i < base_slots; ++i) G.gen_names.emplace_back(1, kGdihLetters[i]);
  G.gen_names.emplace_back("x");
  int xslot = static_cast<int>(base_slots);
  for (int g : a.gens) G.gens.push_back(g);
  G.gens.push_back(a.n); // the involution (0,1)
  G.gen_orders = a.gen_orders;
  G.gen_orders.push_back(2);

  // element (p, eps) = p * x^eps at index eps*|A| + p; x inverts A pointwise:
  // (p, eps)(q, delta) = (p + (-1)^eps q, eps + delta)
  G.table.resize(static_cast<size_t>(G.n) * G.n);
  for (int eps = 0; eps < 2; ++eps)
    for (int p = 0; p < a.n; ++p) {
      size_t row = static_cast<size_t>(eps * a.n + p) * G.n;
      for (int delta = 0; delta < 2; ++delta)
        for (int q = 0; q < a.n; ++q) {
          int pq = eps == 0 ? a.mul(p, q) : a.mul(p, a.inv(q));
          G.table[row + delta * a.n + q] = static_cast<uint16_t>((eps ^ delta) * a.n + pq);
        }
    }

  G.words.resize(G.n);
  for (int eps = 0; eps < 2; ++eps)
    for (int p = 0; p < a.n; ++p) {
      auto& w = G.words[eps * a.n + p];
      w = a.words[p];
      if (eps) w.emplace_back(xslot, 1);
    }

  finalize(G);
  return G;
}

FiniteGroup build_heisenberg5() {
  // Order-125 group of exponent 5 on generators a, b with c = [a,b] central;
  // realized on triples (x, y, z) mod 5 with
  //   (x1,y1,z1)(x2,y2,z2) = (x1+x2, y1+y2, z1+z2+x1*y2),
  // i.e. upper unitriangular 3x3 matrices over Z5.  The word of (x,y,z) is
  // a^x b^y c^w with w = z - x*y mod 5.
  auto pack = [](int x, int y, int z) { return (x * 5 + y) * 5 + z; };

  FiniteGroup G;
  G.n = 125;
  G.spec = "G5";
  G.tag = "g5";
  G.gen_names = {"a", "b", "c"};
  G.gens = {pack(1, 0, 0), pack(0, 1, 0), pack(0, 0, 1)};
  G.gen_orders = {5, 5, 5};

  G.table.resize(125 * 125);
  for (int x1 = 0; x1 < 5; ++x1)
    for (int y1 = 0; y1 < 5; ++y1)
      for (int z1 = 0; z1 < 5; ++z1) {
        size_t row = static_cast<size_t>(pack(x1, y1, z1)) * 125;
        for (int x2 = 0; x2 < 5; ++x2)
          for (int y2 = 0; y2 < 5; ++y2)
            for (int z2 = 0; z2 < 5; ++z2)
              G.table[row + pack(x2, y2, z2)] = static_cast<uint16_t>(
                  pack((x1 + x2) % 5, (y1 + y2) % 5, (z1 + z2 + x1 * y2) % 5));
      }

  G.words.resize(125);
  for (int x = 0; x < 5; ++x)
    for (int y = 0; y < 5; ++y)
      for (int z = 0; z < 5; ++z) {
        int w = ((z - x * y) % 5 + 5) % 5;
        auto& word = G.words[pack(x, y, z)];
        if (x) word.emplace_back(0, x);
        if (y) word.emplace_back(1, y);
        if (w) word.emplace_back(2, w);
      }

  finalize(G);

  int a = G.gens[0], b = G.gens[1], c = G.gens[2];
  int comm = G.mul(G.mul(G.inv(a), G.inv(b)), G.mul(a, b));
  check_internal(comm == c, "[a,b] != c in the order-125 construction");
  check_internal(G.is_central(c), "c is not central in the order-125 construction");
  check_internal(G.exponent == 5, "order-125 construction does not have exponent 5");
  return G;
}

FiniteGroup build_g250(int variant) {
  require(variant == 1 || variant == 2, "order-250 construction variant must be 1 or 2");

  // Order-250 extensions of the order-125 exponent-5 group by an involution d.
  // The 125-part is presented on a, b, c with a central there, b^c = ab, and
  // word a^i b^j c^k; the induced product rule is
  //   (i,j,k)(i',j',k') = (i + i' - k*j', j + j', k + k').
  // d acts by sigma: variant 1 inverts a and b, fixing c; variant 2 fixes a
  // and inverts b and c.  Both sigma's are verified to be involutive
  // automorphisms below before the table is accepted.
  auto pack = [](int i, int j, int k) { return (i * 5 + j) * 5 + k; };
  auto pmul = [&](int u, int v) {
    int i1 = u / 25, j1 = (u / 5) % 5, k1 = u % 5;
    int i2 = v / 25, j2 = (v / 5) % 5, k2 = v % 5;
    return pack(((i1 + i2 - k1 * j2) % 5 + 5) % 5, (j1 + j2) % 5, (k1 + k2) % 5);
  };
  auto sigma = [&](int u) {
    int i = u / 25, j = (u / 5) % 5, k = u % 5;
    if (variant == 1) return pack((5 - i) % 5, (5 - j) % 5, k);
    return pack(i, (5 - j) % 5, (5 - k) % 5);
  };

  for (int u = 0; u < 125; ++u) {
    check_internal(sigma(sigma(u)) == u, "d-action is not involutive");
    for (int v = 0; v < 125; ++v)
      check_internal(sigma(pmul(u, v)) == pmul(sigma(u), sigma(v)),
                     "d-action is not an automorphism of the 125-part");
  }

  FiniteGroup G;
  G.n = 250;
  G.spec = "G250." + std::to_string(variant);
  G.tag = "g250";
  G.gen_names = {"a", "b", "c", "d"};
  G.gens = {pack(1, 0, 0) * 2, pack(0, 1, 0) * 2, pack(0, 0, 1) * 2, 1};
  G.gen_orders = {5, 5, 5, 2};

  // element (u, eps) = u * d^eps at index 2u + eps
  G.table.resize(250 * 250);
  for (int u = 0; u < 125; ++u)
    for (int eps = 0; eps < 2; ++eps) {
      size_t row = static_cast<size_t>(2 * u + eps) * 250;
      for (int v = 0; v < 125; ++v)
        for (int delta = 0; delta < 2; ++delta)
          G.table[row + 2 * v + delta] =
              static_cast<uint16_t>(2 * pmul(u, eps ? sigma(v) : v) + (eps ^ delta));
    }

  G.words.resize(250);
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j)
      for (int k = 0; k < 5; ++k)
        for (int eps = 0; eps < 2; ++eps) {
          auto& w = G.words[2 * pack(i, j, k) + eps];
          if (i) w.emplace_back(0, i);
          if (j) w.emplace_back(1, j);
          if (k) w.emplace_back(2, k);
          if (eps) w.emplace_back(3, 1);
        }

  finalize(G);

  int a = G.gens[0], b = G.gens[1], c = G.gens[2], d = G.gens[3];
  check_internal(G.conj(b, c) == G.mul(a, b), "b^c != ab in the order-250 construction");
  check_internal(G.conj(a, d) == (variant == 1 ? G.power(a, 4) : a),
                 "a^d is wrong in the order-250 construction");
  check_internal(G.conj(b, d) == G.power(b, 4), "b^d != b^4 in the order-250 construction");
  check_internal(G.conj(c, d) == (variant == 1 ? c : G.power(c, 4)),
                 "c^d is wrong in the order-250 construction");
  check_internal(G.exponent == 10, "order-250 construction does not have exponent 10");
  return G;
}

namespace {

struct SpecParser {
  const std::string& s;
  size_t pos = 0;

  [[noreturn]] void err(const std::string& msg) const {
    fail(errc::validation, "group spec \"" + s + "\": " + msg + " at position " +
                               std::to_string(pos));
  }
  bool eat(char c) {
    if (pos < s.size() && s[pos] == c) { ++pos; return true; }
    return false;
  }
  bool peek_word(const char* w) const { return s.compare(pos, std::strlen(w), w) == 0; }
  long integer() {
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) err("expected an integer");
    return std::stol(s.substr(start, pos - start));
  }
  FiniteGroup base() {
    if (peek_word("GDih(")) {
      pos += 5;
      FiniteGroup inner = parse();
      if (!eat(')')) err("expected ')'");
      return build_generalized_dihedral(inner);
    }
    if (peek_word("G250.1")) { pos += 6; return build_g250(1); }
    if (peek_word("G250.2")) { pos += 6; return build_g250(2); }
    if (peek_word("G5")) { pos += 2; return build_heisenberg5(); }
    if (eat('Z')) return build_cyclic(integer());
    if (eat('D')) {
      long order = integer();
      if (order < 2 || order % 2) err("dihedral spec D<order> needs an even order");
      FiniteGroup g = build_generalized_dihedral(build_cyclic(order / 2));
      g.spec = "D" + std::to_string(order);
      return g;
    }
    err("expected Z<n>, D<2m>, G5, G250.1, G250.2, or GDih(...)");
  }
  FiniteGroup term() {
    FiniteGroup g = base();
    if (eat('^')) {
      long k = integer();
      if (k < 1) err("power must be at least 1");
      FiniteGroup acc = g;
      for (long i = 1; i < k; ++i) acc = build_direct_product(acc, g);
      return acc;
    }
    return g;
  }
  FiniteGroup parse() {
    FiniteGroup g = term();
    while (pos < s.size() && s[pos] == 'x') {
      ++pos;
      g = build_direct_product(g, term());
    }
    return g;
  }
};

} // namespace

FiniteGroup parse_group_spec(const std::string& spec) {
  std::string s;
  for (char c : spec)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  require(!s.empty(), "empty group spec");
  SpecParser p{s};
  FiniteGroup g = p.parse();
  if (p.pos != s.size()) p.err("unexpected trailing characters");
  return g;
}

std::vector<int> parse_connection_set(const FiniteGroup& G, const std::string& spec) {
  std::vector<int> S;
  std::string token;
  std::istringstream in(spec);
  while (std::getline(in, token, ',')) {
    bool blank = true;
    for (char c : token)
      if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
    if (blank) continue;
    int g = G.parse_element(token);
    require(g != 0, "connection set cannot contain the identity (token \"" + token + "\")");
    S.push_back(g);
  }
  require(!S.empty(), "empty connection set");
  std::sort(S.begin(), S.end());
  S.erase(std::unique(S.begin(), S.end()), S.end());
  return S;
}

std::string set_to_words(const FiniteGroup& G, const std::vector<int>& S) {
  std::ostringstream os;
  for (size_t i = 0; i < S.size(); ++i) {
    if (i) os << ",";
    os << G.names.at(S[i]);
  }
  return os.str();
}

std::vector<int> generated_subgroup(const FiniteGroup& G, const std::vector<int>& S) {
  std::vector<char> seen(G.n, 0);
  seen[0] = 1;
  std::vector<int> queue{0};
  for (size_t head = 0; head < queue.size(); ++head) {
    int g = queue[head];
    for (int s : S) {
      int h = G.mul(g, s);
      if (!seen[h]) {
        seen[h] = 1;
        queue.push_back(h);
      }
    }
  }
  std::sort(queue.begin(), queue.end());
  return queue;
}

bool generates(const FiniteGroup& G, const std::vector<int>& S) {
  return static_cast<int>(generated_subgroup(G, S).size()) == G.n;
}

std::vector<int> bracket_class(const FiniteGroup& G, int g) {
  int ord = G.element_order(g);
  std::vector<int> cls;
  for (int h : generated_subgroup(G, {g}))
    if (G.element_order(h) == ord) cls.push_back(h);
  return cls; // sorted: generated_subgroup sorts
}

std::vector<std::vector<int>> omega_partition(const FiniteGroup& G) {
  std::vector<char> seen(G.n, 0);
  std::vector<std::vector<int>> parts;
  for (int g = 0; g < G.n; ++g) {
    if (seen[g]) continue;
    auto cls = bracket_class(G, g);
    for (int h : cls) seen[h] = 1;
    parts.push_back(std::move(cls));
  }
  return parts;
}

std::vector<int> power_map(const FiniteGroup& G, const std::vector<int>& S, long k) {
  long kk = ((k % G.exponent) + G.exponent) % G.exponent;
  require(std::gcd(kk, G.exponent) == 1,
          "power map needs gcd(k, exp(G)) = 1 (k = " + std::to_string(k) + ", exp = " +
              std::to_string(G.exponent) + ")");
  std::vector<int> out;
  out.reserve(S.size());
  for (int s : S) out.push_back(G.power(s, kk));
  std::sort(out.begin(), out.end());
  check_internal(std::unique(out.begin(), out.end()) == out.end(),
                 "power map by a unit is not injective");
  return out;
}

std::vector<int> center(const FiniteGroup& G) {
  std::vector<int> Z;
  for (int g = 0; g < G.n; ++g)
    if (G.is_central(g)) Z.push_back(g);
  return Z;
}

std::vector<int> involutions(const FiniteGroup& G) {
  std::vector<int> I;
  for (int g = 1; g < G.n; ++g)
    if (G.mul(g, g) == 0) I.push_back(g);
  return I;
}

NormalityCertificate is_normal_subset(const FiniteGroup& G, const std::vector<int>& S) {
  std::vector<char> in(G.n, 0);
  for (int s : S) in[s] = 1;
  for (int x = 0; x < G.n; ++x)
    for (int s : S)
      if (!in[G.conj(s, x)]) return {false, s, x};
  return {};
}

FiniteGroup subgroup_group(const FiniteGroup& G, const std::vector<int>& elements,
                           std::vector<int>* index_map) {
  std::vector<int> elts = elements;
  std::sort(elts.begin(), elts.end());
  elts.erase(std::unique(elts.begin(), elts.end()), elts.end());
  require(!elts.empty() && elts[0] == 0, "subgroup must contain the identity");

  std::vector<int> to_sub(G.n, -1);
  for (size_t i = 0; i < elts.size(); ++i) to_sub[elts[i]] = static_cast<int>(i);

  FiniteGroup H;
  H.n = static_cast<int>(elts.size());
  H.spec = G.spec + "[sub" + std::to_string(H.n) + "]";
  H.tag = "subgroup";
  H.table.resize(static_cast<size_t>(H.n) * H.n);
  for (int i = 0; i < H.n; ++i)
    for (int j = 0; j < H.n; ++j) {
      int prod = G.mul(elts[i], elts[j]);
      require(to_sub[prod] >= 0, "element set is not closed under multiplication");
      H.table[static_cast<size_t>(i) * H.n + j] = static_cast<uint16_t>(to_sub[prod]);
    }
  H.names.reserve(H.n);
  for (int e : elts) H.names.push_back(G.names[e]);
  finalize(H);
  if (index_map) *index_map = std::move(to_sub);
  return H;
}

std::vector<std::vector<int>> abelian_automorphisms(const FiniteGroup& G) {
  require(G.abelian, "automorphism enumeration is implemented for abelian groups only");
  if (G.n == 1) return {{0}};
  require(!G.gens.empty() && G.words.size() == static_cast<size_t>(G.n),
          "automorphism enumeration needs word-backed generators");
  long prod = 1;
  for (int o : G.gen_orders) prod *= o;
  require(prod == G.n, "generator slots do not form an independent decomposition");

  std::vector<int> order_of(G.n);
  for (int g = 0; g < G.n; ++g) order_of[g] = G.element_order(g);

  int r = static_cast<int>(G.gens.size());
  std::vector<std::vector<int>> cand(r);
  for (int s = 0; s < r; ++s)
    for (int g = 0; g < G.n; ++g)
      if (G.gen_orders[s] % order_of[g] == 0) cand[s].push_back(g);

  std::vector<std::vector<int>> autos;
  std::vector<int> pick(r, 0);
  std::vector<char> seen(G.n);
  while (true) {
    // candidate images h_s = cand[s][pick[s]]; image of g follows its word.
    // Independence of the slots makes the induced map a well-defined
    // endomorphism; bijectivity is all that is left to check.
    std::vector<int> img(G.n, 0);
    std::fill(seen.begin(), seen.end(), 0);
    bool bijective = true;
    for (int g = 0; g < G.n; ++g) {
      int v = 0;
      for (auto [slot, e] : G.words[g]) v = G.mul(v, G.power(cand[slot][pick[slot]], e));
      img[g] = v;
      if (seen[v]) { bijective = false; break; }
      seen[v] = 1;
    }
    if (bijective) autos.push_back(std::move(img));

    int i = 0;
    for (; i < r; ++i) {
      if (++pick[i] < static_cast<int>(cand[i].size())) break;
      pick[i] = 0;
    }
    if (i == r) break;
  }
  std::sort(autos.begin(), autos.end());
  return autos;
}

} // namespace caydeg
