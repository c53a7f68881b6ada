#include "caydeg/cyclotomic.hpp"

#include "caydeg/numbers.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>

namespace caydeg {

namespace {

// Per-conductor context: Phi_m plus the table of x^t mod Phi_m for t in
// [0, m).  Since Phi_m | x^m - 1, x^t == x^{t mod m}, so the table covers
// every exponent that products and Galois images can produce.
struct Ctx {
  long m = 1;
  long phi = 1;
  std::vector<Int> Phi;                // coefficients, low first, monic
  std::vector<std::vector<Int>> pw;    // pw[t] = coords of x^t, length phi
};

std::mutex g_mutex;
std::map<long, std::unique_ptr<IntPoly>> g_cyclo;
std::map<long, std::unique_ptr<Ctx>> g_ctx;

const IntPoly& cyclotomic_unlocked(long m) {
  auto it = g_cyclo.find(m);
  if (it != g_cyclo.end()) return *it->second;
  // x^m - 1 divided by Phi_d for every proper divisor d of m
  std::vector<Int> c(m + 1, 0);
  c[0] = -1;
  c[m] = 1;
  IntPoly f{std::vector<Int>(c)};
  for (long d : divisors(m)) {
    if (d == m) continue;
    f = div_exact(f, cyclotomic_unlocked(d));
  }
  check_internal(f.degree() == euler_phi(m), "cyclotomic polynomial has wrong degree");
  auto owned = std::make_unique<IntPoly>(std::move(f));
  const IntPoly& ref = *owned;
  g_cyclo.emplace(m, std::move(owned));
  return ref;
}

const Ctx& ctx(long m) {
  std::lock_guard<std::mutex> lock(g_mutex);
  auto it = g_ctx.find(m);
  if (it != g_ctx.end()) return *it->second;

  auto c = std::make_unique<Ctx>();
  c->m = m;
  const IntPoly& Phi = cyclotomic_unlocked(m);
  c->phi = Phi.degree();
  c->Phi.assign(Phi.coeffs().begin(), Phi.coeffs().end());

  c->pw.assign(m, std::vector<Int>(c->phi, 0));
  c->pw[0][0] = 1;
  for (long t = 1; t < m; ++t) {
    const auto& prev = c->pw[t - 1];
    auto& cur = c->pw[t];
    Int carry = prev[c->phi - 1]; // coefficient pushed onto x^phi
    for (long i = c->phi - 1; i >= 1; --i) cur[i] = prev[i - 1];
    cur[0] = 0;
    if (carry != 0) // x^phi == -(Phi - x^phi)
      for (long i = 0; i < c->phi; ++i) cur[i] -= carry * c->Phi[i];
  }

  const Ctx& ref = *c;
  g_ctx.emplace(m, std::move(c));
  return ref;
}

long normalize_exponent(long e, long m) { return ((e % m) + m) % m; }

} // namespace

const IntPoly& cyclotomic_polynomial(long m) {
  require(m >= 1, "cyclotomic_polynomial: m must be positive");
  std::lock_guard<std::mutex> lock(g_mutex);
  return cyclotomic_unlocked(m);
}

CyclotomicElement::CyclotomicElement(long m) : m_(m) {
  c_.assign(ctx(m).phi, Rat(0));
}

CyclotomicElement CyclotomicElement::zero(long m) {
  require(m >= 1, "CyclotomicElement: conductor must be positive");
  return CyclotomicElement(m);
}

CyclotomicElement CyclotomicElement::from_rational(long m, const Rat& v) {
  CyclotomicElement r = zero(m);
  r.c_[0] = v;
  return r;
}

CyclotomicElement CyclotomicElement::root_of_unity(long m, long e) {
  CyclotomicElement r = zero(m);
  const auto& row = ctx(m).pw[normalize_exponent(e, m)];
  for (size_t i = 0; i < row.size(); ++i) r.c_[i] = Rat(row[i]);
  return r;
}

CyclotomicElement CyclotomicElement::operator+(const CyclotomicElement& o) const {
  CyclotomicElement r = *this;
  r += o;
  return r;
}

CyclotomicElement& CyclotomicElement::operator+=(const CyclotomicElement& o) {
  require(m_ == o.m_, "cyclotomic arithmetic: conductor mismatch (no implicit lifting)");
  for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

CyclotomicElement CyclotomicElement::operator-(const CyclotomicElement& o) const {
  require(m_ == o.m_, "cyclotomic arithmetic: conductor mismatch (no implicit lifting)");
  CyclotomicElement r = *this;
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i] -= o.c_[i];
  return r;
}

CyclotomicElement CyclotomicElement::operator*(const CyclotomicElement& o) const {
  require(m_ == o.m_, "cyclotomic arithmetic: conductor mismatch (no implicit lifting)");
  const Ctx& cx = ctx(m_);
  long phi = cx.phi;
  std::vector<Rat> conv(2 * phi - 1, Rat(0));
  for (long i = 0; i < phi; ++i) {
    if (c_[i] == 0) continue;
    for (long j = 0; j < phi; ++j) {
      if (o.c_[j] == 0) continue;
      conv[i + j] += c_[i] * o.c_[j];
    }
  }
  CyclotomicElement r = zero(m_);
  for (long t = 0; t < 2 * phi - 1 && t < static_cast<long>(conv.size()); ++t) {
    if (conv[t] == 0) continue;
    if (t < phi) {
      r.c_[t] += conv[t];
    } else {
      const auto& row = cx.pw[t % m_];
      for (long i = 0; i < phi; ++i)
        if (row[i] != 0) r.c_[i] += conv[t] * Rat(row[i]);
    }
  }
  return r;
}

bool CyclotomicElement::operator==(const CyclotomicElement& o) const {
  return m_ == o.m_ && c_ == o.c_;
}

bool CyclotomicElement::operator<(const CyclotomicElement& o) const {
  if (m_ != o.m_) return m_ < o.m_;
  for (size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != o.c_[i]) return c_[i] < o.c_[i];
  return false;
}

bool CyclotomicElement::is_zero() const {
  for (const auto& v : c_)
    if (v != 0) return false;
  return true;
}

std::optional<Rat> CyclotomicElement::as_rational() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return std::nullopt;
  return c_[0];
}

CyclotomicElement CyclotomicElement::galois_apply(long k) const {
  long kk = normalize_exponent(k, m_);
  require(std::gcd(kk, m_) == 1, "galois_apply: exponent not a unit mod the conductor");
  const Ctx& cx = ctx(m_);
  CyclotomicElement r = zero(m_);
  for (long i = 0; i < cx.phi; ++i) {
    if (c_[i] == 0) continue;
    const auto& row = cx.pw[(i * kk) % m_];
    for (long j = 0; j < cx.phi; ++j)
      if (row[j] != 0) r.c_[j] += c_[i] * Rat(row[j]);
  }
  return r;
}

long CyclotomicElement::orbit_size_under(const std::vector<long>& H) const {
  std::set<CyclotomicElement> images;
  for (long k : H) images.insert(galois_apply(k));
  return static_cast<long>(images.size());
}

std::string CyclotomicElement::str() const {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    Rat a = c_[i];
    if (first) {
      if (a < 0) { os << "-"; a = -a; }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    if (i == 0) {
      os << a.str();
    } else {
      if (a != 1) os << a.str() << "*";
      os << "z";
      if (i > 1) os << "^" << i;
    }
  }
  if (first) os << "0";
  return os.str();
}

IntPoly minimal_polynomial(const CyclotomicElement& alpha) {
  long m = alpha.conductor();
  std::set<CyclotomicElement> conj;
  for (long k : unit_group(m).elements) conj.insert(alpha.galois_apply(k));

  std::vector<CyclotomicElement> p{CyclotomicElement::from_rational(m, Rat(1))};
  for (const auto& beta : conj) {
    std::vector<CyclotomicElement> q(p.size() + 1, CyclotomicElement::zero(m));
    for (size_t i = 0; i < p.size(); ++i) {
      q[i + 1] += p[i];
      q[i] = q[i] - beta * p[i];
    }
    p = std::move(q);
  }

  std::vector<Int> coeffs;
  coeffs.reserve(p.size());
  for (const auto& c : p) {
    auto r = c.as_rational();
    check_internal(r.has_value(), "minimal polynomial has a non-rational coefficient");
    require(boost::multiprecision::denominator(*r) == 1,
            "minimal_polynomial: element is not an algebraic integer");
    coeffs.push_back(boost::multiprecision::numerator(*r));
  }
  IntPoly f{std::move(coeffs)};
  check_internal(f.is_monic() && f.degree() == static_cast<int>(conj.size()),
                 "minimal polynomial is not monic of orbit-size degree");
  return f;
}

} // namespace caydeg
