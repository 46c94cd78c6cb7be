#include "ffgauss/gauss_sums.hpp"

#include <sstream>
#include <stdexcept>

namespace ffg {

namespace {

long long mod_dl(long long s, int dl) {
  long long r = s % dl;
  return r < 0 ? r + dl : r;
}

// F_q-coordinate k of z in the power basis, as an element of the big field.
Elem coord(Elem z, int k, int q) {
  for (int i = 0; i < k; ++i) z /= static_cast<Elem>(q);
  return z % static_cast<Elem>(q);
}

Elem qpow(int q, int k) {
  Elem r = 1;
  for (int i = 0; i < k; ++i) r *= static_cast<Elem>(q);
  return r;
}

// Table of an F_q-linear map on F given its images on the basis q^k.
std::vector<Elem> linear_table(const Field& F, const std::vector<Elem>& images) {
  const int q = F.q();
  std::vector<Elem> t(F.size(), 0);
  for (Elem z = 1; z < F.size(); ++z) {
    Elem rest = z, place = 1;
    int k = 0;
    while (rest % q == 0) {
      rest /= q;
      place *= q;
      ++k;
    }
    Elem c = rest % q;
    t[z] = F.add(t[z - c * place], F.mul(c, images[k]));
  }
  return t;
}

// Table of y -> C_b(y) on F_P.
std::vector<Elem> carlitz_table(const CyclotomicContext& ctx, const Poly& b) {
  std::vector<Elem> images;
  for (int k = 0; k < ctx.dl; ++k) images.push_back(carlitz_eval(b, qpow(ctx.q, k), ctx.FP));
  return linear_table(*ctx.F, images);
}

// sum_k omega(q^k) S_k with S_k = sum_{z != 0} coord_k(C_b(z^{-1})) weight(z).
template <class Weight>
Series omega_weighted_sum(const CyclotomicContext& ctx, const Poly& b, Weight weight) {
  const Field& F = *ctx.F;
  auto Cb = carlitz_table(ctx, b);
  std::vector<Elem> S(ctx.dl, 0);
  for (Elem z = 1; z < F.size(); ++z) {
    Elem w = Cb[F.inv(z)];
    if (w == 0) continue;
    Elem wt = weight(z);
    if (wt == 0) continue;
    for (int k = 0; k < ctx.dl; ++k) {
      Elem c = coord(w, k, ctx.q);
      if (c != 0) S[k] = F.add(S[k], F.mul(c, wt));
    }
  }
  Series acc = ctx.W.zero();
  for (int k = 0; k < ctx.dl; ++k)
    if (S[k] != 0) acc = acc + geometric_omega(ctx, qpow(ctx.q, k)).scale(S[k]);
  return acc;
}

}  // namespace

AFrac context_frac(const CyclotomicContext& ctx, const RatFunc& x) {
  AFrac fr = a_fractional(x);
  if (!fr.is_zero() && !fr.n.divides(ctx.n))
    throw std::invalid_argument("x = " + x.str() + " is not in n^{-1}A for n = " + ctx.n.str());
  return fr;
}

Poly gauss_exponent(const CyclotomicContext& ctx, const AFrac& x, const Poly& a) {
  if (x.is_zero()) return Poly(ctx.Fq);
  if (!x.n.divides(ctx.m)) throw std::invalid_argument("gauss_exponent: denominator does not divide v^l - 1");
  return (x.a0 * a * (ctx.m / x.n)) % ctx.m;
}

Series geo_gauss_by_exponent(const CyclotomicContext& ctx, const Poly& b, long long s) {
  const long long sm = mod_dl(s, ctx.dl);
  const auto key = std::make_pair(b.index(), sm);
  {
    std::lock_guard<std::mutex> lock(ctx.mu);
    auto it = ctx.gauss_cache.find(key);
    if (it != ctx.gauss_cache.end()) return it->second;
  }
  const Field& F = *ctx.F;
  Series G = ctx.W.one() + omega_weighted_sum(ctx, b, [&](Elem z) { return F.frob(teichmuller_psi(ctx, z), sm); });
  std::lock_guard<std::mutex> lock(ctx.mu);
  return ctx.gauss_cache.emplace(key, G).first->second;
}

Series geo_gauss_value(const CyclotomicContext& ctx, const AFrac& x, const Poly& a, long long s) {
  if (!x.is_zero() && !gcd(a, ctx.n).is_one()) throw std::invalid_argument("geo_gauss: a is not a unit mod n");
  return geo_gauss_by_exponent(ctx, gauss_exponent(ctx, x, a), s);
}

GaussValue geo_gauss(const ContextPtr& ctx, const AFrac& x, const Poly& a, long long s) {
  return GaussValue{ctx, x, a, mod_dl(s, ctx->dl), geo_gauss_value(*ctx, x, a, s)};
}

const OreData& ore_data(const CyclotomicContext& ctx) {
  {
    std::lock_guard<std::mutex> lock(ctx.mu);
    if (ctx.ore) return *ctx.ore;
  }
  auto od = std::make_shared<OreData>();
  od->fam = dual_families(ctx.m);
  for (const Poly& b : od->fam.b) od->lambdas.push_back(carlitz_eval(b, ctx.lambda_m, ctx.W));
  od->stars = ore_lambda_stars(ctx.W, od->lambdas);
  for (const Series& x : od->lambdas) od->lambda_bars.push_back(reduce(x));
  for (const Series& x : od->stars) od->star_bars.push_back(reduce(x));
  std::lock_guard<std::mutex> lock(ctx.mu);
  if (!ctx.ore) ctx.ore = od;
  return *ctx.ore;
}

Series scalar_product_oracle(const CyclotomicContext& ctx, const AFrac& x) {
  const OreData& od = ore_data(ctx);
  Poly b = gauss_exponent(ctx, x, Poly::constant(ctx.Fq, 1));
  Series acc = ctx.W.one();
  for (size_t i = 0; i < od.lambdas.size(); ++i) {
    Series t = carlitz_eval(b, od.lambdas[i], ctx.W);
    acc = acc - t.scale(teichmuller_psi(ctx, od.star_bars[i]));
  }
  return acc;
}

Series gauss_monomial(const CyclotomicContext& ctx, const AFrac& x, const QDigits& y) {
  if (y.t != ctx.dl || y.q != ctx.q) throw std::invalid_argument("gauss_monomial: y must have denominator q^{dl} - 1");
  Series acc = ctx.W.one();
  for (int s = 0; s < ctx.dl; ++s)
    if (y.digits[s] != 0) acc = acc * geo_gauss_value(ctx, x, Poly::constant(ctx.Fq, 1), s).pow(y.digits[s]);
  return acc;
}

Series tilde_gauss(const CyclotomicContext& ctx, const AFrac& x) {
  const Field& F = *ctx.F;
  Poly b = gauss_exponent(ctx, x, Poly::constant(ctx.Fq, 1));
  Series S = omega_weighted_sum(ctx, b, [&](Elem z) {
    Elem tr = 0;
    for (int i = 0; i < ctx.l; ++i) tr = F.add(tr, F.frob(z, static_cast<long long>(ctx.d) * i));
    return teichmuller_psi(ctx, tr);
  });
  return -S;
}

Series tilde_from_conjugates(const CyclotomicContext& ctx, const AFrac& x) {
  Series acc = ctx.W.zero();
  for (int i = 0; i < ctx.l; ++i)
    acc = acc + (ctx.W.one() - geo_gauss_value(ctx, x, Poly::constant(ctx.Fq, 1), static_cast<long long>(ctx.d) * i));
  return acc;
}

Series ari_gauss(const CyclotomicContext& ctx, long long s) {
  RamifiedData rd = ramified_extend(ctx);
  const SeriesRing& R = *rd.ring;
  const Field& F = *ctx.F;
  const long long sm = mod_dl(s, ctx.dl);
  const int d = ctx.d;
  std::vector<Elem> S(d, 0);
  const std::uint64_t count = qpow(ctx.q, d);
  for (std::uint64_t idx = 1; idx < count; ++idx) {
    Poly z = Poly::from_index(ctx.Fq, idx);
    Elem chi = F.frob(F.inv(teichmuller_psi(ctx, z.eval(F, ctx.t0))), sm);
    for (int k = 0; k < d; ++k)
      if (z[k] != 0) S[k] = F.add(S[k], F.mul(z[k], chi));
  }
  Series acc = R.zero();
  for (int k = 0; k < d; ++k) {
    if (S[k] == 0) continue;
    Series phik = carlitz_eval(Poly::monomial(ctx.Fq, k), rd.phi1, R);
    acc = acc + phik.scale(S[k]);
  }
  return -acc;
}

Series ari_monomial(const CyclotomicContext& ctx, const QDigits& y) {
  if (y.t != ctx.dl || y.q != ctx.q) throw std::invalid_argument("ari_monomial: y must have denominator q^{dl} - 1");
  RamifiedData rd = ramified_extend(ctx);
  Series acc = rd.ring->one();
  for (int s = 0; s < ctx.dl; ++s)
    if (y.digits[s] != 0) acc = acc * ari_gauss(ctx, s).pow(y.digits[s]);
  return acc;
}

Series geo_monomial_ramified(const CyclotomicContext& ctx, const AFrac& x, const QDigits& y) {
  RamifiedData rd = ramified_extend(ctx);
  return to_ramified(gauss_monomial(ctx, x, y), rd.ring->ram);
}

Series two_var_monomial(const CyclotomicContext& ctx, const AFrac& x, const QDigits& y) {
  Series den = ari_monomial(ctx, y);
  if (den.is_zero()) throw std::domain_error("two_var_monomial: arithmetic monomial indistinguishable from zero");
  return geo_monomial_ramified(ctx, x, y) / den;
}

GroupRingElem::Key GroupRingElem::key(const Poly& a, long long s) const {
  return {(a % n_).index(), static_cast<int>(mod_dl(s, dl_))};
}

void GroupRingElem::add(const Poly& a, long long s, long long c) {
  auto k = key(a, s);
  long long& slot = terms_[k];
  slot += c;
  if (slot == 0) terms_.erase(k);
}

long long GroupRingElem::coeff(const Poly& a, long long s) const {
  auto it = terms_.find(key(a, s));
  return it == terms_.end() ? 0 : it->second;
}

GroupRingElem GroupRingElem::operator*(const GroupRingElem& o) const {
  if (n_ != o.n_ || dl_ != o.dl_) throw std::invalid_argument("GroupRingElem: mismatched groups");
  GroupRingElem r(n_, dl_);
  const FieldPtr& F = n_.field();
  for (const auto& [k1, c1] : terms_)
    for (const auto& [k2, c2] : o.terms_) {
      Poly a = Poly::from_index(F, k1.first) * Poly::from_index(F, k2.first);
      r.add(a, k1.second + k2.second, c1 * c2);
    }
  return r;
}

GroupRingElem GroupRingElem::operator+(const GroupRingElem& o) const {
  GroupRingElem r = *this;
  for (const auto& [k, c] : o.terms_) r.add(Poly::from_index(n_.field(), k.first), k.second, c);
  return r;
}

long long GroupRingElem::total() const {
  long long t = 0;
  for (const auto& kv : terms_) t += kv.second;
  return t;
}

std::string GroupRingElem::str() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << c << "*s(" << Poly::from_index(n_.field(), k.first).str() << "," << k.second << ")";
  }
  if (first) os << "0";
  return os.str();
}

Series act_on_gauss(const CyclotomicContext& ctx, const AFrac& x, const GroupRingElem& e) {
  Series acc = ctx.W.one();
  const FieldPtr& F = e.n().field();
  for (const auto& [k, c] : e.terms())
    acc = acc * geo_gauss_value(ctx, x, Poly::from_index(F, k.first), k.second).pow(c);
  return acc;
}

std::vector<Poly> units_mod(const Poly& n) {
  std::vector<Poly> out;
  const std::uint64_t count = qpow(n.q(), n.deg());
  for (std::uint64_t idx = 1; idx < count; ++idx) {
    Poly a = Poly::from_index(n.field(), idx);
    if (gcd(a, n).is_one()) out.push_back(a);
  }
  return out;
}

Series gauss_at_infinity(const CyclotomicContext& ctx, const AFrac& x, long long s, const InfRing& R) {
  const Field& F = *ctx.F;
  const int q = ctx.q, dl = ctx.dl;
  const long long sm = mod_dl(s, dl);
  const Poly b = gauss_exponent(ctx, x, Poly::constant(ctx.Fq, 1));
  if (b.is_zero()) return R.one();
  // C_a(lambda_m-bar) and b a mod m, both F_q-linear in a.
  std::vector<Elem> beta;
  std::vector<Poly> bth;
  Poly th = Poly::constant(ctx.Fq, 1);
  for (int j = 0; j < dl; ++j) {
    beta.push_back(carlitz_eval(th, ctx.lambda_m_bar, ctx.FP));
    bth.push_back((b * th) % ctx.m);
    th = th * Poly::theta(ctx.Fq);
  }
  const std::uint64_t count = qpow(q, dl);
  std::vector<Elem> Ca(count, 0);
  std::vector<Poly> ba(count, Poly(ctx.Fq));
  std::vector<Elem> S(dl, 0);
  for (std::uint64_t a = 1; a < count; ++a) {
    std::uint64_t rest = a, place = 1;
    int k = 0;
    while (rest % q == 0) {
      rest /= q;
      place *= q;
      ++k;
    }
    Elem c = static_cast<Elem>(rest % q);
    Ca[a] = F.add(Ca[a - c * place], F.mul(c, beta[k]));
    ba[a] = ba[a - c * place] + bth[k].scale(c);
    Elem w = F.frob(F.inv(Ca[a]), sm);
    for (int j = 0; j < dl; ++j) {
      Elem cj = ba[a][j];
      if (cj != 0) S[j] = F.add(S[j], F.mul(cj, w));
    }
  }
  Series acc = R.one();
  th = Poly::constant(ctx.Fq, 1);
  for (int j = 0; j < dl; ++j) {
    if (S[j] != 0) acc = acc + e_eval(R, RatFunc(th, ctx.m)).scale(S[j]);
    th = th * Poly::theta(ctx.Fq);
  }
  return acc;
}

Elem estar_reduction(const CyclotomicContext& ctx, const AFrac& x) {
  const OreData& od = ore_data(ctx);
  const Field& F = *ctx.F;
  Poly a0 = gauss_exponent(ctx, x, Poly::constant(ctx.Fq, 1));
  Elem w = 0;
  for (size_t i = 0; i < od.fam.b.size(); ++i) {
    Elem c = residue_map(a0 * od.fam.b[i], ctx.m);
    if (c != 0) w = F.add(w, F.mul(c, od.star_bars[i]));
  }
  return w;
}

EmbeddingPtr context_embedding(const CyclotomicContext& small, const CyclotomicContext& big) {
  if (small.q != big.q || small.v != big.v) throw std::invalid_argument("context_embedding: contexts differ in q or v");
  if (big.dl % small.dl != 0) throw std::invalid_argument("context_embedding: dl does not divide dl'");
  auto roots = roots_over(small.Fq, small.F->modulus(), big.F);
  for (Elem r : roots) {
    auto e = std::make_shared<Embedding>(small.F, big.F, r);
    if ((*e)(small.t0) == big.t0) return e;
  }
  throw std::logic_error("context_embedding: no embedding matches t0");
}

}  // namespace ffg
