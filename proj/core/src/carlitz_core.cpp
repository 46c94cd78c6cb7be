#include "ffgauss/carlitz_core.hpp"

#include <map>

namespace ffg {

CarlitzCoeffs carlitz_coeffs(const Poly& a) {
  const FieldPtr& F = a.field();
  CarlitzCoeffs out{a, {}};
  if (a.is_zero()) return out;
  // Horner over C_theta = theta + tau: C_{theta b + c} = theta C_b + tau C_b + c.
  const Poly th = Poly::theta(F);
  std::vector<Poly> cur;
  for (int k = a.deg(); k >= 0; --k) {
    std::vector<Poly> nxt(cur.size() + 1, Poly(F));
    for (size_t i = 0; i < cur.size(); ++i) {
      nxt[i] = nxt[i] + th * cur[i];
      nxt[i + 1] = nxt[i + 1] + cur[i].frob(1);
    }
    if (nxt.empty()) nxt.emplace_back(F);
    nxt[0] = nxt[0] + Poly::constant(F, a[k]);
    while (nxt.size() > 1 && nxt.back().is_zero()) nxt.pop_back();
    cur = std::move(nxt);
  }
  out.c = std::move(cur);
  return out;
}

PolyA carlitz_as_poly(const Poly& a) {
  const FieldPtr& F = a.field();
  auto cc = carlitz_coeffs(a);
  if (cc.c.empty()) return {};
  long long top = 1;
  for (size_t i = 1; i < cc.c.size(); ++i) top *= F->q();
  PolyA out(static_cast<size_t>(top) + 1, Poly(F));
  long long e = 1;
  for (size_t i = 0; i < cc.c.size(); ++i) {
    out[e] = cc.c[i];
    e *= F->q();
  }
  return out;
}

PolyA polya_mul(const PolyA& x, const PolyA& y) {
  if (x.empty() || y.empty()) return {};
  const FieldPtr& F = x[0].field() ? x[0].field() : x.back().field();
  PolyA out(x.size() + y.size() - 1, Poly(F));
  for (size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero()) continue;
    for (size_t j = 0; j < y.size(); ++j)
      if (!y[j].is_zero()) out[i + j] = out[i + j] + x[i] * y[j];
  }
  while (!out.empty() && out.back().is_zero()) out.pop_back();
  return out;
}

PolyA polya_div_exact(const PolyA& x, const PolyA& y) {
  if (y.empty() || !y.back().is_one()) throw std::invalid_argument("polya_div_exact: divisor not monic");
  const FieldPtr& F = y.back().field();
  PolyA r = x;
  while (!r.empty() && r.back().is_zero()) r.pop_back();
  if (r.size() < y.size()) {
    if (!r.empty()) throw std::logic_error("polya_div_exact: nonzero remainder");
    return {};
  }
  PolyA qt(r.size() - y.size() + 1, Poly(F));
  const long ysz = static_cast<long>(y.size());
  for (long k = static_cast<long>(r.size()) - 1; k >= ysz - 1; --k) {
    Poly c = r[k];
    if (c.is_zero()) continue;
    const long shift = k - (ysz - 1);
    qt[shift] = c;
    for (long j = 0; j < ysz; ++j) r[shift + j] = r[shift + j] - c * y[j];
  }
  for (const Poly& c : r)
    if (!c.is_zero()) throw std::logic_error("polya_div_exact: nonzero remainder");
  while (!qt.empty() && qt.back().is_zero()) qt.pop_back();
  return qt;
}

PolyA cyclotomic_poly(const Poly& n) {
  if (n.deg() < 1 || !n.is_monic()) throw std::invalid_argument("cyclotomic_poly: n must be monic of degree >= 1");
  std::map<std::uint64_t, PolyA> star;
  auto divs = monic_divisors(n);
  for (const Poly& e : divs) {
    if (e.deg() == 0) continue;
    PolyA acc = carlitz_as_poly(e);
    // C_1^star = z is the deg-0 divisor's factor.
    PolyA z{Poly(n.field()), Poly::constant(n.field(), 1)};
    acc = polya_div_exact(acc, z);
    for (const Poly& f : divs) {
      if (f.deg() == 0 || f == e || !f.divides(e)) continue;
      acc = polya_div_exact(acc, star.at(f.index() + (static_cast<std::uint64_t>(f.deg()) << 40)));
    }
    star[e.index() + (static_cast<std::uint64_t>(e.deg()) << 40)] = acc;
  }
  return star.at(n.index() + (static_cast<std::uint64_t>(n.deg()) << 40));
}

fpoly::P polya_reduce(const PolyA& f, const Field& G, Elem t) {
  fpoly::P out(f.size());
  for (size_t i = 0; i < f.size(); ++i) out[i] = f[i].eval(G, t);
  fpoly::trim(out);
  return out;
}

int order_mod(const Poly& v, const Poly& n) {
  if (!gcd(v, n).is_one()) throw std::invalid_argument("order_mod: gcd(v, n) != 1");
  if (n.deg() < 1) return 1;
  Poly base = v % n, cur = base;
  int l = 1;
  while (!cur.is_one()) {
    cur = (cur * base) % n;
    ++l;
    if (l > 1000000) throw std::logic_error("order_mod: no convergence");
  }
  return l;
}

}  // namespace ffg
