#include "ffgauss/local_v.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace ffg {

Series SeriesRing::embed(const Poly& a) const {
  Series acc = zero();
  for (int k = a.deg(); k >= 0; --k) {
    acc = acc * T;
    if (a[k] != 0) acc = acc + constant(a[k]);
  }
  return acc;
}

Series SeriesRing::embed(const RatFunc& x) const {
  Series num = embed(x.num());
  if (x.den().is_one()) return num;
  return num / embed(x.den());
}

Series SeriesRing::hensel(const std::vector<Series>& f, const Series& r0) const {
  if (f.empty()) throw std::invalid_argument("hensel: empty polynomial");
  Series X = r0;
  const long long target = cap.abs;
  for (int it = 0; it < 200; ++it) {
    Series fx = zero(), dfx = zero();
    for (int k = static_cast<int>(f.size()) - 1; k >= 0; --k) {
      dfx = dfx * X + (k + 1 < static_cast<int>(f.size()) ? f[k + 1].scale(F->from_int(k + 1)) : zero());
      fx = fx * X + f[k];
    }
    if (dfx.is_zero() || dfx.valuation() != 0)
      throw std::domain_error("hensel: derivative is not a unit at the residue root");
    Series Xn = X - fx / dfx;
    if (fx.is_zero() && fx.prec() >= target && Xn.agree_upto(X) >= target) return Xn;
    X = Xn;
  }
  throw std::logic_error("hensel: iteration did not stabilize");
}

SeriesRing make_unramified(const Poly& v, const FieldPtr& F, Elem t0, long long prec) {
  SeriesRing W;
  W.F = F;
  W.cap = Cap::absolute(prec);
  W.ram = 1;
  // Root of v(X) - V with X = t0 mod V.
  std::vector<Series> f;
  for (int k = 0; k <= v.deg(); ++k) f.push_back(Series::constant(F, v[k], W.cap));
  f[0] = f[0] - Series::monomial(F, 1, 1, W.cap);
  W.T = Series::constant(F, 1, W.cap);  // placeholder for hensel's ring ops
  W.T = W.hensel(f, Series::constant(F, t0, W.cap));
  return W;
}

Series to_ramified(const Series& s, int e) {
  Cap c = s.cap();
  Cap nc{c.abs >= Cap::kUnbounded ? c.abs : c.abs * e, c.rel >= Cap::kUnbounded ? c.rel : c.rel * e};
  const Field& F = *s.field();
  std::vector<Elem> out;
  if (s.is_zero()) {
    long long p = s.prec() >= Cap::kUnbounded ? Cap::kUnbounded : s.prec() * e;
    return Series::from_coeffs(s.field(), p, {}, p, nc, e);
  }
  long long val = s.val() * e;
  long long prec = s.prec() >= Cap::kUnbounded ? Cap::kUnbounded : s.prec() * e;
  long long len = std::min(prec, nc.abs) - val;
  out.assign(static_cast<size_t>(std::max(0LL, len)), 0);
  for (size_t i = 0; i < s.digits().size(); ++i) {
    long long j = s.val() + static_cast<long long>(i);
    long long pos = static_cast<long long>(i) * e;
    if (pos >= len) break;
    Elem c = s.digits()[i];
    out[pos] = (j % 2 != 0) ? F.neg(c) : c;
  }
  return Series::from_coeffs(s.field(), val, std::move(out), std::min(prec, nc.abs), nc, e);
}

SeriesRing make_ramified(const SeriesRing& W, const Poly& v) {
  const int q = v.q();
  int e = 1;
  for (int i = 0; i < v.deg(); ++i) e *= q;
  e -= 1;
  SeriesRing R;
  R.F = W.F;
  R.cap = Cap::absolute(W.cap.abs * e);
  R.ram = e;
  R.T = to_ramified(W.T, e);
  return R;
}

Rational valuation(const Series& x) {
  long long k = x.valuation();
  long long r = x.ram() <= 0 ? 1 : x.ram();
  long long g = std::gcd(k < 0 ? -k : k, r);
  if (g == 0) g = 1;
  return {k / g, r / g};
}

Elem reduce(const Series& s) {
  if (!s.is_zero() && s.val() < 0) throw std::domain_error("reduce: series is not integral");
  return s.coeff(0);
}

Elem teichmuller_psi(const CyclotomicContext&, Elem z) { return z; }

const Series& geometric_omega(const CyclotomicContext& ctx, Elem z) { return ctx.omega_table.at(z); }

Series omega_newton(const CyclotomicContext& ctx, Elem z) {
  const SeriesRing& W = ctx.W;
  auto cm = carlitz_coeffs_in(W, ctx.m);
  Series minv = W.embed(ctx.m).inv();
  Series X = W.constant(z);
  for (int it = 0; it < 200; ++it) {
    Series CX = apply_linear(W, cm, X);
    if (CX.is_zero() && CX.prec() >= W.cap.abs) return X;
    X = X - CX * minv;
  }
  throw std::logic_error("geometric_omega: iteration did not stabilize");
}

namespace {

// F_q-coordinates of x in the power basis of F.
std::vector<Elem> coords(const Field& F, Elem x) { return F.coeffs(x); }

bool is_generator(const ResidueRing& R, Elem z, int dl) {
  const Field& F = *R.F;
  const FieldPtr Fq = F.base();
  fmat::M M;
  Elem w = z;
  for (int k = 0; k < dl; ++k) {
    M.push_back(coords(F, w));
    w = F.add(F.mul(R.t, w), F.frob(w, 1));
  }
  return !fmat::inverse(*Fq, M).empty();
}

}  // namespace

ContextPtr make_context(int q, const Poly& v, const Poly& n, long long prec) {
  auto ctx = std::make_shared<CyclotomicContext>();
  FieldPtr Fq = Field::get(q, 1);
  if (!v.is_monic() || !is_irreducible(v)) throw std::invalid_argument("make_context: v must be monic irreducible");
  if (!n.is_monic() || n.deg() < 1) throw std::invalid_argument("make_context: n must be monic of degree >= 1");
  if (!gcd(v, n).is_one()) throw std::invalid_argument("make_context: gcd(n, v) != 1");
  if (prec < 1) throw std::invalid_argument("make_context: prec must be positive");
  ctx->q = q;
  ctx->Fq = Fq;
  ctx->v = v;
  ctx->d = v.deg();
  ctx->n = n;
  ctx->l = order_mod(v, n);
  ctx->dl = ctx->d * ctx->l;
  double size = 1;
  for (int i = 0; i < ctx->dl; ++i) size *= q;
  if (size > 65536.0) throw std::invalid_argument("make_context: q^{dl} exceeds the configured bound 2^16");
  ctx->m = v.pow(ctx->l) - Poly::constant(Fq, 1);
  ctx->F = Field::get(q, ctx->dl);
  const Field& F = *ctx->F;
  auto vroots = roots_over(Fq, v.coeffs(), ctx->F);
  if (vroots.empty()) throw std::logic_error("make_context: v has no root in F_P");
  ctx->t0 = vroots.front();
  ctx->prec = prec;
  ctx->W = make_unramified(v, ctx->F, ctx->t0, prec);
  ctx->FP = ResidueRing{ctx->F, ctx->t0};
  ctx->Fd = Field::get(q, ctx->d);

  // The prime P: smallest root of C_n^* mod v in F_P, its orbit under q^d-Frobenius.
  PolyA cyc = cyclotomic_poly(n);
  fpoly::P cbar = polya_reduce(cyc, F, ctx->t0);
  auto roots = roots_over(ctx->F, cbar, ctx->F);
  if (static_cast<int>(roots.size()) != fpoly::deg(cbar))
    throw std::logic_error("make_context: cyclotomic polynomial does not split in F_P");
  for (Elem r : roots) {
    int orbit = 1;
    for (Elem y = F.frob(r, ctx->d); y != r; y = F.frob(y, ctx->d)) ++orbit;
    if (orbit != ctx->l) throw std::logic_error("make_context: factor of unexpected degree");
  }
  ctx->lambda_bar = roots.front();
  fpoly::P fac{1};
  {
    Elem y = ctx->lambda_bar;
    for (int j = 0; j < ctx->l; ++j) {
      fac = fpoly::mul(F, fac, fpoly::P{F.neg(y), 1});
      y = F.frob(y, ctx->d);
    }
    auto emb = Embedding::standard(ctx->Fd, ctx->F);
    for (auto& c : fac) c = emb->back(c);
    ctx->factor_P = fac;
  }

  // Geometric Teichmueller table, by F_q-linearity from the power basis.
  std::vector<Series> basis;
  for (int k = 0; k < ctx->dl; ++k) {
    Elem uk = 1;
    for (int j = 0; j < k; ++j) uk *= static_cast<Elem>(q);
    basis.push_back(omega_newton(*ctx, uk));
  }
  ctx->omega_table.assign(F.size(), ctx->W.zero());
  for (Elem z = 1; z < F.size(); ++z) {
    // Peel off the lowest nonzero coordinate and reuse the smaller entry.
    Elem rest = z, place = 1;
    int k = 0;
    while (rest % q == 0) {
      rest /= q;
      place *= q;
      ++k;
    }
    Elem c = rest % q;
    ctx->omega_table[z] = ctx->omega_table[z - c * place] + basis[k].scale(c);
  }

  // lambda_m: generator of C(F_P) lying over lambda_bar.
  Poly mn = ctx->m / n;
  bool found = false;
  for (Elem z = 1; z < F.size() && !found; ++z) {
    if (carlitz_eval(mn, z, ctx->FP) != ctx->lambda_bar) continue;
    if (!is_generator(ctx->FP, z, ctx->dl)) continue;
    ctx->lambda_m_bar = z;
    found = true;
  }
  if (!found) throw std::logic_error("make_context: no torsion generator over lambda_bar");
  ctx->lambda_m = ctx->omega_table[ctx->lambda_m_bar];

  std::vector<Series> cyc_w;
  for (const Poly& c : cyc) cyc_w.push_back(ctx->W.embed(c));
  ctx->lambda = ctx->W.hensel(cyc_w, ctx->W.constant(ctx->lambda_bar));
  if (!ctx->lambda.equals_to(ctx->omega_table[ctx->lambda_bar], prec))
    throw std::logic_error("make_context: Hensel lift of lambda disagrees with omega");
  return ctx;
}

RamifiedData ramified_extend(const CyclotomicContext& ctx) {
  std::lock_guard<std::mutex> lock(ctx.mu);
  if (!ctx.ram_ring) {
    auto R = std::make_shared<SeriesRing>(make_ramified(ctx.W, ctx.v));
    const int e = R->ram;
    auto cv = carlitz_coeffs(ctx.v);
    std::vector<Series> f(e + 1, R->zero());
    f[e] = R->one();
    f[0] = R->constant(ctx.F->neg(1));
    long long qi = 1;
    for (int i = 1; i < ctx.d; ++i) {
      qi *= ctx.q;
      auto [ri, rem] = cv.c[i].divmod(ctx.v);
      if (!rem.is_zero()) throw std::logic_error("ramified_extend: Carlitz coefficient not divisible by v");
      Series term = R->embed(ri) * Series::monomial(ctx.F, 1, qi - 1, R->cap, e);
      f[qi - 1] = f[qi - 1] - term;
    }
    Series w = R->hensel(f, R->constant(ctx.F->neg(1)));
    ctx.phi1 = std::make_shared<Series>(w.shift(1));
    ctx.ram_ring = R;
  }
  Series varpi = Series::monomial(ctx.F, 1, 1, ctx.ram_ring->cap, ctx.ram_ring->ram);
  return {ctx.ram_ring, varpi, *ctx.phi1};
}

}  // namespace ffg
