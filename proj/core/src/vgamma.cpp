#include "ffgauss/vgamma.hpp"

#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace ffg {

PRat::PRat(long long r_, long long D_) : r(r_), D(D_) {
  if (D == 0) throw std::invalid_argument("PRat: zero denominator");
  if (D < 0) {
    r = -r;
    D = -D;
  }
  long long g = std::gcd(r < 0 ? -r : r, D);
  if (g > 1) {
    r /= g;
    D /= g;
  }
}

PRat PRat::operator+(const PRat& o) const {
  long long g = std::gcd(D, o.D);
  return PRat(r * (o.D / g) + o.r * (D / g), D / g * o.D);
}

PRat PRat::operator-(const PRat& o) const { return *this + (-o); }

std::string PRat::str() const {
  std::ostringstream os;
  os << r;
  if (D != 1) os << "/" << D;
  return os.str();
}

PRat PRat::parse(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return PRat(std::stoll(s), 1);
    return PRat(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
  } catch (const std::logic_error&) {
    throw std::invalid_argument("cannot parse p-adic rational '" + s + "'");
  }
}

long long digits_value(const DigitStream& y, int count) {
  long long acc = 0, qi = 1;
  for (int i = 0; i < count; ++i) {
    acc += y[i] * qi;
    qi *= y.q();
  }
  return acc;
}

GammaEngine::GammaEngine(int q, const Poly& v, const FieldPtr& F, Elem t0, long long prec)
    : q_(q), v_(v), d_(v.deg()), F_(F), t0_(t0), prec_(prec), cache_(std::make_shared<Cache>()) {
  if (prec < 1) throw std::invalid_argument("GammaEngine: precision must be positive");
  if (!v.is_monic() || !is_irreducible(v)) throw std::invalid_argument("GammaEngine: v must be monic irreducible");
  i_max_ = static_cast<long long>(d_) * (prec + 1);
  W_ = make_unramified(v, F, t0, prec);
}

GammaEngine GammaEngine::for_context(const CyclotomicContext& ctx, long long prec) {
  return GammaEngine(ctx.q, ctx.v, ctx.F, ctx.t0, prec);
}

GammaEngine GammaEngine::standalone(int q, const Poly& v, long long prec) {
  FieldPtr F = Field::get(q, v.deg());
  auto roots = roots_over(Field::get(q, 1), v.coeffs(), F);
  if (roots.empty()) throw std::invalid_argument("GammaEngine: v has no root in A/v");
  return GammaEngine(q, v, F, roots.front(), prec);
}

Series GammaEngine::to_out(const Series& s) const { return s.with_cap(W_.cap); }

Series GammaEngine::flat(const RatFunc& x) const {
  auto [sg, fl] = sgn_flat(x, v_);
  (void)sg;
  return W_.embed(fl);
}

Series GammaEngine::flat_level_brute(int i, const RatFunc& x) const {
  if (!x.v_integral(v_)) throw std::domain_error("flat_level: x is not v-integral");
  Series acc = W_.one();
  for_each_monic(v_.field(), i, [&](const Poly& a) {
    RatFunc z = x + RatFunc(a);
    if (z.is_zero() || v_.divides(z.num())) return;
    acc = acc * W_.embed(z);
  });
  return acc;
}

std::vector<Series> GammaEngine::compute_levels_fast(const RatFunc& x, long long upto, long long margin) const {
  const long long R = prec_ + margin;
  SeriesRing Wr = make_unramified(v_, F_, t0_, R);
  Wr.cap = Cap::relative(R);
  Wr.T = Wr.T.with_cap(Wr.cap);
  const bool zero = x.is_zero();
  const FieldPtr& Fq = v_.field();

  // x0 = x mod v with deg x0 < d, x' = (x - x0) / v.
  Poly x0(Fq);
  RatFunc xp;
  bool removes_low = false;
  Series X, Xp;
  if (!zero) {
    x0 = (x.num() * invmod(x.den(), v_)) % v_;
    xp = (x - RatFunc(x0)) / RatFunc(v_);
    X = Wr.embed(x);
    Xp = Wr.embed(xp);
    Poly mx0 = -x0;
    removes_low = mx0.is_monic();
  }

  std::vector<long long> qpow(upto + 1, 1);
  for (long long i = 1; i <= upto; ++i) {
    if (qpow[i - 1] > (Cap::kUnbounded >> 3) / q_)
      throw std::range_error("gamma: level count exceeds the supported valuation range");
    qpow[i] = qpow[i - 1] * q_;
  }

  std::vector<Series> Fx, Fxp, Dv;
  Series D = Wr.one(), E = X, Ep = Xp;
  Series Tq = Wr.T;
  std::vector<Series> out;
  for (long long i = 0; i <= upto; ++i) {
    Dv.push_back(D);
    if (!zero) {
      Fx.push_back(E + D);
      Fxp.push_back(Ep + D);
    }
    Series num = zero ? D : Fx[i];
    Series den = Wr.one();
    if (i >= d_) {
      den = (zero ? Dv[i - d_] : Fxp[i - d_]).shift(qpow[i - d_]);
    } else if (!zero && removes_low && x0.deg() == i) {
      den = Xp.shift(1);
    }
    out.push_back(num / den);
    if (i == upto) break;
    Tq = Tq.frob(1);
    Series Dq1 = D.pow(q_ - 1);
    if (!zero) {
      E = E.frob(1) - Dq1 * E;
      Ep = Ep.frob(1) - Dq1 * Ep;
    }
    D = (Tq - Wr.T) * D.frob(1);
  }
  return out;
}

std::vector<Series> GammaEngine::compute_levels(const RatFunc& x, long long upto) const {
  if (!x.v_integral(v_)) throw std::domain_error("gamma: x is not v-integral");
  if (x.is_poly() && !x.is_zero()) {
    // x + a runs over A+,i once i > deg x.
    const std::vector<Series> base = levels(RatFunc(Poly(v_.field())), upto);
    std::vector<Series> out;
    for (long long i = 0; i <= upto; ++i)
      out.push_back(i <= x.num().deg() ? flat_level_brute(static_cast<int>(i), x) : base[i]);
    return out;
  }
  for (long long margin = 32; margin <= 1024; margin *= 2) {
    auto raw = compute_levels_fast(x, upto, margin);
    bool ok = true;
    for (const Series& s : raw)
      if (s.is_zero() || s.val() != 0 || s.prec() < prec_) {
        ok = false;
        break;
      }
    if (!ok) continue;
    std::vector<Series> out;
    for (const Series& s : raw) out.push_back(to_out(s));
    return out;
  }
  throw std::runtime_error("gamma: level products lost too much precision");
}

std::vector<Series> GammaEngine::levels(const RatFunc& x, long long upto) const {
  const std::string key = x.str();
  {
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto it = cache_->levels.find(key);
    if (it != cache_->levels.end() && static_cast<long long>(it->second.size()) > upto) return it->second;
  }
  auto lv = compute_levels(x, std::max(upto, i_max_ + d_));
  std::lock_guard<std::mutex> lock(cache_->mu);
  auto& slot = cache_->levels[key];
  if (slot.size() < lv.size()) slot = std::move(lv);
  return slot;
}

std::vector<Series> GammaEngine::flat_levels(const RatFunc& x, long long upto) const {
  auto lv = levels(x, upto);
  lv.resize(upto + 1);
  return lv;
}

Series GammaEngine::flat_level(int i, const RatFunc& x) const { return levels(x, i)[i]; }

Series GammaEngine::pi_ari_upto(const DigitStream& y, long long upto) const {
  const auto lv = levels(RatFunc(Poly(v_.field())), upto);
  Series acc = W_.one();
  for (long long i = 0; i <= upto; ++i) {
    int yi = y[i];
    if (yi != 0) acc = acc * (-lv[i]).pow(yi);
  }
  return acc;
}

Series GammaEngine::pi_geo_upto(const RatFunc& x, const DigitStream& y, long long upto) const {
  const auto l0 = levels(RatFunc(Poly(v_.field())), upto);
  const auto lx = levels(x, upto);
  Series acc = W_.one();
  for (long long i = 0; i <= upto; ++i) {
    int yi = y[i];
    if (yi != 0) acc = acc * (l0[i] / lx[i]).pow(yi);
  }
  return acc;
}

Series GammaEngine::pi_ari(const DigitStream& y) const { return pi_ari_upto(y, i_max_); }

Series GammaEngine::pi_geo(const RatFunc& x, const DigitStream& y) const { return pi_geo_upto(x, y, i_max_); }

Series GammaEngine::pi_geo(const RatFunc& x) const { return pi_geo(x, DigitStream(q_, -1, q_ - 1)); }

Series GammaEngine::pi_two(const RatFunc& x, const DigitStream& y) const { return pi_geo(x, y) / pi_ari(y); }

Series GammaEngine::gamma_ari(const PRat& y) const { return pi_ari((y - PRat::integer(1)).digits(q_)); }

Series GammaEngine::gamma_geo(const RatFunc& x, const PRat& y) const {
  return pi_geo(x, (y - PRat::integer(1)).digits(q_)) / flat(x);
}

Series GammaEngine::gamma_geo(const RatFunc& x) const { return pi_geo(x) / flat(x); }

Series GammaEngine::gamma_two(const RatFunc& x, const PRat& y) const {
  return pi_two(x, (y - PRat::integer(1)).digits(q_)) / flat(x);
}

Series GammaEngine::gamma(GammaKind kind, const RatFunc& x, const PRat& y) const {
  switch (kind) {
    case GammaKind::Arithmetic:
      return gamma_ari(y);
    case GammaKind::Geometric:
      return gamma_geo(x, y);
    case GammaKind::TwoVariable:
      return gamma_two(x, y);
  }
  throw std::invalid_argument("gamma: unknown kind");
}

Series GammaEngine::one_unit_pow(const Series& u, const DigitStream& y) const {
  if (u.is_zero() || u.val() != 0 || reduce(u) != 1) throw std::domain_error("one_unit_pow: u is not a one-unit");
  Series acc = W_.one();
  Series uj = u.with_cap(W_.cap);
  for (long long j = 0;; ++j) {
    if ((uj - W_.one()).is_zero()) break;
    int yj = y[j];
    if (yj != 0) acc = acc * uj.pow(yj);
    uj = uj.frob(1);
  }
  return acc;
}

}  // namespace ffg
