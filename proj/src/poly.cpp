#include "caydeg/poly.hpp"

#include <algorithm>
#include <sstream>

namespace caydeg {

void IntPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::x_power(int k) {
  require(k >= 0, "x_power: negative exponent");
  std::vector<Int> c(k + 1, 0);
  c[k] = 1;
  return IntPoly(std::move(c));
}

const Int& IntPoly::lc() const {
  require(!is_zero(), "lc of zero polynomial");
  return c_.back();
}

IntPoly IntPoly::operator-() const {
  auto c = c_;
  for (auto& v : c) v = -v;
  return IntPoly(std::move(c));
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
  std::vector<Int> c(std::max(c_.size(), o.c_.size()), 0);
  for (size_t i = 0; i < c_.size(); ++i) c[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) c[i] += o.c_[i];
  return IntPoly(std::move(c));
}

IntPoly IntPoly::operator-(const IntPoly& o) const { return *this + (-o); }

IntPoly IntPoly::operator*(const IntPoly& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<Int> c(c_.size() + o.c_.size() - 1, 0);
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
  return IntPoly(std::move(c));
}

IntPoly IntPoly::scaled(const Int& k) const {
  auto c = c_;
  for (auto& v : c) v *= k;
  return IntPoly(std::move(c));
}

IntPoly IntPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Int> c(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * Int(i);
  return IntPoly(std::move(c));
}

Int IntPoly::eval(const Int& v) const {
  Int acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * v + *it;
  return acc;
}

Rat IntPoly::eval(const Rat& v) const {
  Rat acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * v + Rat(*it);
  return acc;
}

Int IntPoly::content() const {
  Int g = 0;
  for (const auto& v : c_) g = boost::multiprecision::gcd(g, v);
  if (!is_zero() && lc() < 0) g = -g;
  return g;
}

IntPoly IntPoly::primitive_part() const {
  if (is_zero()) return {};
  Int g = content();
  auto c = c_;
  for (auto& v : c) {
    Int q = v / g;
    check_internal(q * g == v, "primitive_part: content does not divide");
    v = q;
  }
  return IntPoly(std::move(c));
}

Int IntPoly::norm2_squared() const {
  Int s = 0;
  for (const auto& v : c_) s += v * v;
  return s;
}

std::string IntPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Int& a = c_[i];
    if (a == 0) continue;
    Int mag = boost::multiprecision::abs(a);
    if (first) {
      if (a < 0) os << "-";
      first = false;
    } else {
      os << (a < 0 ? " - " : " + ");
    }
    bool unit = (mag == 1);
    if (i == 0 || !unit) os << mag.str();
    if (i > 0) {
      if (!unit) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

IntPoly div_exact(const IntPoly& f, const IntPoly& g) {
  require(!g.is_zero(), "div_exact: division by zero polynomial");
  if (f.is_zero()) return {};
  require(f.degree() >= g.degree(), "div_exact: degree of divisor too large");
  std::vector<Int> rem = f.coeffs();
  std::vector<Int> q(f.degree() - g.degree() + 1, 0);
  for (int k = f.degree() - g.degree(); k >= 0; --k) {
    Int& top = rem[k + g.degree()];
    Int t = top / g.lc();
    check_internal(t * g.lc() == top, "div_exact: leading coefficient does not divide");
    q[k] = t;
    for (int i = 0; i <= g.degree(); ++i) rem[k + i] -= t * g[i];
  }
  for (const auto& v : rem) check_internal(v == 0, "div_exact: nonzero remainder");
  return IntPoly(std::move(q));
}

IntPoly pseudo_rem(const IntPoly& f, const IntPoly& g) {
  require(!g.is_zero(), "pseudo_rem: zero divisor");
  int dg = g.degree();
  if (f.is_zero() || f.degree() < dg) return f;
  // exact normalization lc(g)^(deg f - deg g + 1) * f mod g: count every
  // scaling even when the degree drops by more than one
  int e = f.degree() - dg + 1;
  IntPoly r = f;
  const Int& gl = g.lc();
  while (!r.is_zero() && r.degree() >= dg) {
    int shift = r.degree() - dg;
    Int rl = r.lc();
    std::vector<Int> c(r.coeffs());
    for (auto& v : c) v *= gl;
    for (int i = 0; i <= dg; ++i) c[shift + i] -= rl * g[i];
    r = IntPoly(std::move(c));
    --e;
  }
  // pad out the remaining scalings
  Int pad = 1;
  for (int i = 0; i < e; ++i) pad *= gl;
  return r.scaled(pad);
}

IntPoly poly_gcd(const IntPoly& f, const IntPoly& g) {
  if (f.is_zero() && g.is_zero()) return {};
  if (f.is_zero()) return g.lc() < 0 ? -g : g;
  if (g.is_zero()) return f.lc() < 0 ? -f : f;
  Int cf = f.content(), cg = g.content();
  Int c = boost::multiprecision::gcd(cf, cg);
  if (c < 0) c = -c;
  IntPoly F = f.primitive_part(), G = g.primitive_part();
  if (F.degree() < G.degree()) std::swap(F, G);
  // subresultant PRS
  Int gg = 1, h = 1;
  while (true) {
    int delta = F.degree() - G.degree();
    IntPoly R = pseudo_rem(F, G);
    if (R.is_zero()) break;
    if (G.degree() == 0) { G = IntPoly::constant(1); break; }
    Int div = gg;
    for (int i = 0; i < delta; ++i) div *= h;
    F = G;
    G = R;
    {
      std::vector<Int> cc = G.coeffs();
      for (auto& v : cc) {
        Int q = v / div;
        check_internal(q * div == v, "poly_gcd: subresultant division not exact");
        v = q;
      }
      G = IntPoly(std::move(cc));
    }
    gg = F.lc();
    if (delta > 0) {
      Int num = 1;
      for (int i = 0; i < delta; ++i) num *= gg;
      for (int i = 0; i < delta - 1; ++i) {
        Int q = num / h;
        check_internal(q * h == num, "poly_gcd: h update not exact");
        num = q;
      }
      h = num;
    }
    if (G.degree() == 0) { G = IntPoly::constant(1); break; }
  }
  IntPoly out = G.primitive_part().scaled(c);
  if (out.lc() < 0) out = -out;
  return out;
}

std::vector<std::pair<IntPoly, int>> squarefree_decomposition(const IntPoly& f) {
  require(!f.is_zero() && f.degree() >= 1, "squarefree_decomposition: need degree >= 1");
  IntPoly P = f.primitive_part();
  if (P.lc() < 0) P = -P;
  std::vector<std::pair<IntPoly, int>> out;
  // Yun's algorithm
  IntPoly d = P.derivative();
  IntPoly a = poly_gcd(P, d);
  IntPoly b = div_exact(P, a);
  IntPoly cpart = div_exact(d, a);
  IntPoly diff = cpart - b.derivative();
  int i = 1;
  while (b.degree() > 0) {
    IntPoly gi = poly_gcd(b, diff);
    if (gi.degree() > 0) out.emplace_back(gi.lc() < 0 ? -gi : gi, i);
    b = div_exact(b, gi);
    cpart = div_exact(diff, gi);
    diff = cpart - b.derivative();
    ++i;
  }
  // sanity: product reconstructs P
  IntPoly prod = IntPoly::constant(1);
  for (auto& [g, m] : out)
    for (int k = 0; k < m; ++k) prod = prod * g;
  check_internal(prod == P || prod == -P, "squarefree_decomposition: product mismatch");
  return out;
}

IntPoly squarefree_part(const IntPoly& f) {
  require(!f.is_zero() && f.degree() >= 1, "squarefree_part: need degree >= 1");
  IntPoly P = f.primitive_part();
  IntPoly g = poly_gcd(P, P.derivative());
  IntPoly out = div_exact(P, g).primitive_part();
  if (out.lc() < 0) out = -out;
  return out;
}

} // namespace caydeg
