#include "ffgauss/theorem_lab.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace ffg {

namespace {

using Params = std::vector<std::pair<std::string, std::string>>;

Poly one_poly(const FieldPtr& F) { return Poly::constant(F, 1); }

long long ipow(long long b, long long e) {
  long long r = 1;
  for (long long i = 0; i < e; ++i) r *= b;
  return r;
}

Poly theta_minus(const FieldPtr& F, Elem c) { return Poly::theta(F) - Poly::constant(F, c); }

std::string rat_str(const RatFunc& x) { return x.str(); }

Status worst(Status a, Status b) {
  if (a == Status::Fail || b == Status::Fail) return Status::Fail;
  if (a == Status::Inconclusive || b == Status::Inconclusive) return Status::Inconclusive;
  return Status::Pass;
}

// Digest truncated to the compared precision so exact values print finitely.
std::string digest_at(const Series& s, long long target) {
  if (s.ram() == 0) {
    if (s.is_zero()) return s.digest();
    return s.truncate(std::min(s.prec(), s.val() + target)).digest();
  }
  return s.truncate(std::min(s.prec(), target * std::max(1, s.ram()))).digest();
}

VerificationReport base_report(const std::string& id, Params params) {
  VerificationReport r;
  r.theorem_id = id;
  r.params = std::move(params);
  return r;
}

void set_series(VerificationReport& r, const Series& lhs, const Series& rhs, long long target) {
  Comparison c = compare_series(lhs, rhs, target);
  r.status = c.status;
  r.achieved_precision = c.achieved;
  r.lhs = digest_at(lhs, target);
  r.rhs = digest_at(rhs, target);
}

// Folds a secondary comparison into the report.
void fold(VerificationReport& r, const Comparison& c, const std::string& what) {
  if (c.status != Status::Pass) {
    if (!r.note.empty()) r.note += "; ";
    r.note += what + ": " + status_name(c.status);
  }
  r.status = worst(r.status, c.status);
  r.achieved_precision = std::min(r.achieved_precision, c.achieved);
}

void fold_bool(VerificationReport& r, bool ok, const std::string& what) {
  fold(r, Comparison{ok ? Status::Pass : Status::Fail, r.achieved_precision}, what);
}

Comparison compare_inf(const Series& lhs, const Series& rhs, long long rel_target) {
  // Relative precision at infinity, measured from the valuation of rhs.
  if (rhs.is_zero()) return compare_series(lhs, rhs, rel_target);
  const long long base = rhs.val();
  const long long shared = std::min(lhs.prec(), rhs.prec());
  const long long agree = lhs.agree_upto(rhs);
  if (agree < shared) return {Status::Fail, std::max(0LL, agree - base)};
  const long long got = shared - base;
  if (got >= rel_target) return {Status::Pass, rel_target};
  return {Status::Inconclusive, got};
}

std::string vec_str(const std::vector<long long>& v) {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << "]";
  return os.str();
}

std::string table_str(const std::vector<std::vector<long long>>& t) {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < t.size(); ++i) os << (i ? "," : "") << vec_str(t[i]);
  os << "]";
  return os.str();
}

long long elem_int(Elem e) { return static_cast<long long>(e); }

// y = r/D as digits over q^t - 1.
QDigits prat_qdigits(const PRat& y, int q, int t) {
  const long long den = ipow(q, t) - 1;
  if (den % y.D != 0) throw std::invalid_argument("y = " + y.str() + " is not in (q^t - 1)^{-1} Z");
  return q_digits(q, y.r * (den / y.D), t);
}

DigitStream neg_digits(const QDigits& y) { return DigitStream(y.q, -y.numerator(), y.denominator()); }

std::mutex g_mu;
// Extra digits carried above the reported target while a retry is running.
thread_local long long g_extra = 0;
std::map<std::string, ContextPtr> g_contexts;
std::map<std::string, std::shared_ptr<GammaEngine>> g_engines;

std::string ctx_key(int q, const Poly& v, const Poly& n, long long prec) {
  std::ostringstream os;
  os << q << "|" << v.str() << "|" << n.str() << "|" << prec;
  return os.str();
}

const GammaEngine& engine_for(const CyclotomicContext& ctx) {
  const std::string key = "c|" + ctx_key(ctx.q, ctx.v, ctx.n, ctx.prec);
  std::lock_guard<std::mutex> lock(g_mu);
  auto it = g_engines.find(key);
  if (it != g_engines.end()) return *it->second;
  auto e = std::make_shared<GammaEngine>(GammaEngine::for_context(ctx, ctx.prec));
  return *g_engines.emplace(key, e).first->second;
}

const GammaEngine& standalone_engine(int q, const Poly& v, long long prec) {
  prec += g_extra;
  const std::string key = "s|" + ctx_key(q, v, Poly(v.field()), prec);
  std::lock_guard<std::mutex> lock(g_mu);
  auto it = g_engines.find(key);
  if (it != g_engines.end()) return *it->second;
  auto e = std::make_shared<GammaEngine>(GammaEngine::standalone(q, v, prec));
  return *g_engines.emplace(key, e).first->second;
}

Params ctx_params(int q, const Poly& v, const Poly& n) {
  return {{"q", std::to_string(q)}, {"v", v.str()}, {"n", n.str()}};
}

// Base-v digits x_0..x_{l-1} of b = <x> (v^l - 1), each of degree < d.
std::vector<Poly> v_digits(const CyclotomicContext& ctx, const AFrac& x) {
  Poly b = gauss_exponent(ctx, x, one_poly(ctx.Fq));
  std::vector<Poly> out;
  for (int i = 0; i < ctx.l; ++i) {
    auto [qt, r] = b.divmod(ctx.v);
    out.push_back(r);
    b = qt;
  }
  return out;
}

// delta_{x,i} = v <v^{l-i-1} x> embedded in W.
Series delta_factor(const CyclotomicContext& ctx, const AFrac& x, int i) {
  RatFunc t = RatFunc(ctx.v.pow(ctx.l - i - 1)) * x.value();
  AFrac fr = a_fractional(t);
  return ctx.W.embed(RatFunc(ctx.v) * fr.value());
}

// prod_{i<l} Pi(<v^i x>, -<q^{di} y>)^{-1} with Pi = pi_geo or pi_two.
Series gamma_side(const CyclotomicContext& ctx, const AFrac& x, const QDigits& y, bool two) {
  const GammaEngine& E = engine_for(ctx);
  Series acc = ctx.W.one();
  for (int i = 0; i < ctx.l; ++i) {
    AFrac xi = a_fractional(RatFunc(ctx.v.pow(i)) * x.value());
    DigitStream ds = neg_digits(digit_shift(y, static_cast<long long>(ctx.d) * i));
    Series p = two ? E.pi_two(xi.value(), ds) : E.pi_geo(xi.value(), ds);
    acc = acc * p.inv();
  }
  return acc;
}

Series deltas(const CyclotomicContext& ctx, const AFrac& x, const QDigits& y) {
  Series acc = ctx.W.one();
  if (x.is_zero()) return acc;
  auto xs = v_digits(ctx, x);
  for (int i = 0; i < ctx.l; ++i) {
    if (!xs[i].is_monic()) continue;
    int e = y.digits[ctx.d * i + xs[i].deg()];
    if (e != 0) acc = acc * delta_factor(ctx, x, i).pow(e);
  }
  return acc;
}

long long ari_exponent(const CyclotomicContext& ctx, const QDigits& y) {
  long long E = 0;
  for (int s = 0; s < ctx.dl; ++s) E += y.digits[s] * ipow(ctx.q, s % ctx.d);
  return E;
}

// Every digit 1: y = 1/(q-1), kept unreduced so q = 2 does not collapse to 0.
QDigits ones(int q, int t) { return QDigits{q, t, std::vector<int>(t, 1)}; }

AFrac frac_of(const CyclotomicContext& ctx, const RatFunc& x) { return context_frac(ctx, x); }

}  // namespace

std::string status_name(Status s) {
  switch (s) {
    case Status::Pass:
      return "pass";
    case Status::Fail:
      return "fail";
    case Status::Inconclusive:
      return "inconclusive-precision";
  }
  return "fail";
}

namespace {
nlohmann::ordered_json report_obj(const VerificationReport& r) {
  nlohmann::ordered_json j;
  j["theorem_id"] = r.theorem_id;
  nlohmann::ordered_json p = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.params) p[k] = v;
  j["params"] = p;
  j["status"] = status_name(r.status);
  j["achieved_precision"] = r.achieved_precision;
  j["lhs"] = r.lhs;
  j["rhs"] = r.rhs;
  j["runtime_ms"] = r.runtime_ms;
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}
}  // namespace

std::string report_json(const VerificationReport& r) { return report_obj(r).dump(); }

std::string reports_json(const std::vector<VerificationReport>& rs) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : rs) arr.push_back(report_obj(r));
  return arr.dump(1);
}

std::string reports_tsv(const std::vector<VerificationReport>& rs) {
  std::ostringstream os;
  os << "theorem_id\tparams\tstatus\tachieved_precision\tnote\n";
  for (const auto& r : rs) {
    os << r.theorem_id << "\t";
    for (size_t i = 0; i < r.params.size(); ++i) os << (i ? ";" : "") << r.params[i].first << "=" << r.params[i].second;
    os << "\t" << status_name(r.status) << "\t" << r.achieved_precision << "\t" << r.note << "\n";
  }
  return os.str();
}

Comparison compare_series(const Series& lhs, const Series& rhs, long long target) {
  const int ram = std::max(1, std::max(lhs.ram(), rhs.ram()));
  const long long tgt = target * ram;
  const long long shared = std::min(lhs.prec(), rhs.prec());
  const long long agree = lhs.agree_upto(rhs);
  if (agree < shared) return {Status::Fail, std::max(0LL, agree) / ram};
  if (shared >= tgt) return {Status::Pass, target};
  return {Status::Inconclusive, shared / ram};
}

Comparison compare_elems(Elem lhs, Elem rhs) {
  return {lhs == rhs ? Status::Pass : Status::Fail, 0};
}

ContextPtr get_context(int q, const Poly& v, const Poly& n, long long prec) {
  const std::string key = ctx_key(q, v, n, prec);
  {
    std::lock_guard<std::mutex> lock(g_mu);
    auto it = g_contexts.find(key);
    if (it != g_contexts.end()) return it->second;
  }
  ContextPtr c = make_context(q, v, n, prec);
  std::lock_guard<std::mutex> lock(g_mu);
  return g_contexts.emplace(key, c).first->second;
}

namespace {
ContextPtr wctx(int q, const Poly& v, const Poly& n, long long prec) { return get_context(q, v, n, prec + g_extra); }
}  // namespace

VerificationReport with_retry(const std::function<VerificationReport(long long)>& f, long long prec) {
  VerificationReport r = f(prec);
  if (r.status != Status::Inconclusive) return r;
  for (long long extra : std::initializer_list<long long>{4, prec}) {
    struct Reset {
      ~Reset() { g_extra = 0; }
    } reset;
    g_extra = extra;
    try {
      VerificationReport r2 = f(prec);
      if (!r2.note.empty()) r2.note += "; ";
      r2.note += "working precision +" + std::to_string(extra);
      r = std::move(r2);
    } catch (const std::range_error&) {
      break;
    }
    if (r.status != Status::Inconclusive) break;
  }
  return r;
}

// ---------------------------------------------------------------- worked example

VerificationReport verify_worked_example(int q, Elem eps, long long prec) {
  FieldPtr Fq = Field::get(q, 1);
  Poly v = Poly::theta(Fq), n = theta_minus(Fq, 1);
  auto ctx = wctx(q, v, n, prec);
  AFrac x{Poly::constant(Fq, eps), n};
  auto r = base_report("worked-example", {{"q", std::to_string(q)}, {"v", v.str()}, {"n", n.str()},
                                          {"x", x.str()}, {"prec", std::to_string(prec)}});
  Series G = geo_gauss_value(*ctx, x, one_poly(Fq), 0);
  const Series& w1 = geometric_omega(*ctx, 1);
  Series rhs = ctx->W.one() - w1.scale(eps);
  set_series(r, G, rhs, prec);
  fold(r, compare_series(w1.pow(q - 1), ctx->W.embed(one_poly(Fq) - Poly::theta(Fq)), prec), "omega(1)^(q-1) = 1 - theta");
  fold_bool(r, reduce(w1) == 1, "omega(1) = 1 mod v");
  return r;
}

// ---------------------------------------------------------------- gauss sums

VerificationReport verify_oracle(int q, const Poly& v, const Poly& n, const AFrac& x, long long prec) {
  auto ctx = wctx(q, v, n, prec);
  Params p = ctx_params(q, v, n);
  p.push_back({"x", x.str()});
  p.push_back({"prec", std::to_string(prec)});
  auto r = base_report("oracle", p);
  set_series(r, geo_gauss_value(*ctx, x, one_poly(ctx->Fq), 0), scalar_product_oracle(*ctx, x), prec);
  return r;
}

VerificationReport verify_reflection(int q, const Poly& v, const Poly& n, const AFrac& x, long long prec) {
  auto ctx = wctx(q, v, n, prec);
  Params p = ctx_params(q, v, n);
  p.push_back({"x", x.str()});
  p.push_back({"prec", std::to_string(prec)});
  auto r = base_report("reflection", p);
  if (x.is_zero()) {
    set_series(r, ctx->W.one(), ctx->W.one(), prec);
    r.note = "x in A";
    return r;
  }
  Series P = ctx->W.one();
  for (Elem e = 1; e < static_cast<Elem>(q); ++e)
    for (int s = 0; s < ctx->dl; ++s) P = P * geo_gauss_value(*ctx, x, Poly::constant(ctx->Fq, e), s);
  set_series(r, P, ctx->W.embed(v.pow(ctx->l)), prec);
  return r;
}

VerificationReport verify_reflection_corollary(int q, const Poly& v, const Poly& n, const AFrac& x,
                                               const QDigits& y, long long prec) {
  auto ctx = wctx(q, v, n, prec);
  Params p = ctx_params(q, v, n);
  p.push_back({"x", x.str()});
  p.push_back({"y", y.str()});
  p.push_back({"prec", std::to_string(prec)});
  auto r = base_report("reflection-corollary", p);
  QDigits y1 = y;
  for (int& dgt : y1.digits) dgt = q - 1 - dgt;
  Series lhs = gauss_monomial(*ctx, x, y) * gauss_monomial(*ctx, x, y1);
  Series rhs = gauss_monomial(*ctx, x, ones(q, ctx->dl)).pow(q - 1);
  set_series(r, lhs, rhs, prec);
  return r;
}

VerificationReport verify_tilde(int q, const Poly& v, const Poly& n, const AFrac& x, long long prec) {
  auto ctx = wctx(q, v, n, prec);
  Params p = ctx_params(q, v, n);
  p.push_back({"x", x.str()});
  p.push_back({"prec", std::to_string(prec)});
  auto r = base_report("tilde", p);
  set_series(r, tilde_gauss(*ctx, x), tilde_from_conjugates(*ctx, x), prec);
  return r;
}

VerificationReport verify_compatibility(int q, const Poly& v, const Poly& n, const Poly& n2, const AFrac& x,
                                        long long prec) {
  auto c1 = wctx(q, v, n, prec);
  auto c2 = wctx(q, v, n2, prec);
  Params p = ctx_params(q, v, n);
  p.push_back({"n2", n2.str()});
  p.push_back({"x", x.str()});
  p.push_back({"prec", std::to_string(prec)});
  auto r = base_report("compatibility", p);
  auto emb = context_embedding(*c1, *c2);
  Series small = geo_gauss_value(*c1, x, one_poly(c1->Fq), 0).map_field(*emb);
  set_series(r, geo_gauss_value(*c2, x, one_poly(c2->Fq), 0), small, prec);
  return r;
}

// ---------------------------------------------------------------- GKT

VerificationReport verify_gkt_first(int q, const Poly& v, const Poly& n, const AFrac& x, int s, long long prec) {
  auto ctx = wctx(q, v, n, prec);
  Params p = ctx_params(q, v, n);
  p.push_back({"x", x.str()});
  p.push_back({"s", std::to_string(s)});
  p.push_back({"prec", std::to_string(prec)});
  auto r = base_report("gkt-first", p);
  if (s < 0 || s >= ctx->dl) throw std::invalid_argument("gkt-first: s must lie in [0, dl)");
  Series lhs = geo_gauss_value(*ctx, x, one_poly(ctx->Fq), s);
  QDigits y{q, ctx->dl, std::vector<int>(ctx->dl, 0)};
  y.digits[s] = 1;
  Series rhs = gamma_side(*ctx, x, y, false);
  const int e = s / ctx->d, sp = s - e * ctx->d;
  if (!x.is_zero()) {
    auto xs = v_digits(*ctx, x);
    if (xs[e].is_monic() && xs[e].deg() == sp) {
      rhs = rhs * delta_factor(*ctx, x, e);
      r.note = "delta branch";
    }
  }
  set_series(r, lhs, rhs, prec);
  return r;
}

VerificationReport verify_gkt_geo(int q, const Poly& v, const Poly& n, const AFrac& x, const QDigits& y,
                                  long long prec) {
  auto ctx = wctx(q, v, n, prec);
  Params p = ctx_params(q, v, n);
  p.push_back({"x", x.str()});
  p.push_back({"y", y.str()});
  p.push_back({"prec", std::to_string(prec)});
  auto r = base_report("gkt-geo", p);
  Series lhs = gauss_monomial(*ctx, x, y);
  Series rhs = deltas(*ctx, x, y) * gamma_side(*ctx, x, y, false);
  set_series(r, lhs, rhs, prec);
  return r;
}

VerificationReport verify_gkt_ari(int q, const Poly& v, const Poly& n, const QDigits& y, long long prec) {
  auto ctx = wctx(q, v, n, prec);
  Params p = ctx_params(q, v, n);
  p.push_back({"y", y.str()});
  p.push_back({"prec", std::to_string(prec)});
  auto r = base_report("gkt-ari", p);
  RamifiedData rd = ramified_extend(*ctx);
  const GammaEngine& E = engine_for(*ctx);
  Series pis = ctx->W.one();
  for (int i = 0; i < ctx->l; ++i)
    pis = pis * E.pi_ari(neg_digits(digit_shift(y, static_cast<long long>(ctx->d) * i))).inv();
  Series rhs = to_ramified(pis, rd.ring->ram).shift(ari_exponent(*ctx, y));
  set_series(r, ari_monomial(*ctx, y), rhs, prec);
  return r;
}

VerificationReport verify_gkt_two(int q, const Poly& v, const Poly& n, const AFrac& x, const QDigits& y,
                                  long long prec) {
  auto ctx = wctx(q, v, n, prec);
  Params p = ctx_params(q, v, n);
  p.push_back({"x", x.str()});
  p.push_back({"y", y.str()});
  p.push_back({"prec", std::to_string(prec)});
  auto r = base_report("gkt-two", p);
  RamifiedData rd = ramified_extend(*ctx);
  Series w = deltas(*ctx, x, y) * gamma_side(*ctx, x, y, true);
  Series rhs = to_ramified(w, rd.ring->ram).shift(-ari_exponent(*ctx, y));
  set_series(r, two_var_monomial(*ctx, x, y), rhs, prec);
  return r;
}

// ---------------------------------------------------------------- Hasse-Davenport

namespace {

struct HdSetup {
  ContextPtr ctx;
  int h = 0;
  std::vector<Poly> alphas;
};

HdSetup hd_setup(int q, const Poly& v, const Poly& n, const Poly& g, long long prec) {
  if (!g.is_monic() || g.deg() < 1) throw std::invalid_argument("hd: g must be monic of positive degree");
  if (!gcd(g, v).is_one()) throw std::invalid_argument("hd: g must be coprime to v");
  const Poly gn = g * n;
  const int f = order_mod(v, gn);
  if (ipow(q, static_cast<long long>(v.deg()) * f) > (1LL << 12))
    throw std::invalid_argument("hd: context too large (q^{df} > 2^12)");
  HdSetup s;
  s.ctx = wctx(q, v, gn, prec);
  s.h = g.deg();
  s.alphas = enumerate_below(v.field(), s.h);
  return s;
}

}  // namespace

VerificationReport verify_hd_geo(int q, const Poly& v, const Poly& n, const Poly& g, const AFrac& x,
                                 const PRat& y, long long prec) {
  HdSetup S = hd_setup(q, v, n, g, prec);
  const CyclotomicContext& C = *S.ctx;
  Params p = ctx_params(q, v, n);
  p.push_back({"g", g.str()});
  p.push_back({"x", x.str()});
  p.push_back({"y", y.str()});
  p.push_back({"prec", std::to_string(prec)});
  auto r = base_report("hd-geo", p);
  QDigits yd = prat_qdigits(y, q, C.dl);
  const RatFunc gi = RatFunc(one_poly(C.Fq), g);
  Series num = C.W.one(), den = C.W.one();
  for (const Poly& a : S.alphas) {
    num = num * gauss_monomial(C, frac_of(C, (x.value() + RatFunc(a)) * gi), yd);
    den = den * gauss_monomial(C, frac_of(C, RatFunc(a) * gi), yd);
  }
  Series rhs = gauss_monomial(C, frac_of(C, x.value()), digit_shift(yd, S.h));
  set_series(r, num / den, rhs, prec);
  // Denominator product and the v-power form at y = 1/(q-1).
  QDigits o = ones(q, C.dl);
  Series den1 = C.W.one(), num1 = C.W.one();
  for (const Poly& a : S.alphas) {
    den1 = den1 * gauss_monomial(C, frac_of(C, RatFunc(a) * gi), o);
    num1 = num1 * gauss_monomial(C, frac_of(C, (x.value() + RatFunc(a)) * gi), o);
  }
  const long long vexp = static_cast<long long>(C.l) * (ipow(q, S.h) - 1) / (q - 1);
  Series vpow = C.W.embed(v.pow(vexp));
  fold(r, compare_series(den1, vpow, prec), "denominator v-power");
  if (!x.is_zero())
    fold(r, compare_series(num1, vpow * gauss_monomial(C, frac_of(C, x.value()), o), prec), "v-power form");
  return r;
}

VerificationReport verify_hd_two(int q, const Poly& v, const Poly& n, const Poly& g, const AFrac& x,
                                 const PRat& y, long long prec) {
  HdSetup S = hd_setup(q, v, n, g, prec);
  const CyclotomicContext& C = *S.ctx;
  Params p = ctx_params(q, v, n);
  p.push_back({"g", g.str()});
  p.push_back({"x", x.str()});
  p.push_back({"y", y.str()});
  p.push_back({"prec", std::to_string(prec)});
  auto r = base_report("hd-two", p);
  QDigits yd = prat_qdigits(y, q, C.dl);
  const RatFunc gi = RatFunc(one_poly(C.Fq), g);
  RamifiedData rd = ramified_extend(C);
  Series lhs = rd.ring->one();
  for (const Poly& a : S.alphas) lhs = lhs * two_var_monomial(C, frac_of(C, (x.value() + RatFunc(a)) * gi), yd);
  const Field& F = *C.F;
  const long long qd1 = ipow(q, C.d) - 1;
  long long ex = -(ipow(q, S.h) % qd1) * (yd.numerator() % qd1) % qd1;
  if (ex < 0) ex += qd1;
  Elem gv = F.pow(g.eval(F, C.t0), ex);
  Series rhs = two_var_monomial(C, frac_of(C, x.value()), digit_shift(yd, S.h)).scale(gv);
  set_series(r, lhs, rhs, prec);
  return r;
}

VerificationReport verify_hd_ymult(int q, const Poly& v, long long N, long long nmul, const RatFunc& x,
                                   const PRat& y, long long prec) {
  if (nmul < 1 || nmul % Field::get(q, 1)->p() == 0) throw std::invalid_argument("hd-ymult: n must be prime to p");
  if (((nmul - 1) * (q - 1)) % 2 != 0) throw std::invalid_argument("hd-ymult: (n-1)(q-1) must be even");
  const long long Nn = N * nmul;
  const long long qd = ipow(q, v.deg());
  long long f = 1, acc = qd % Nn;
  while (acc != 1 % Nn) {
    acc = acc * qd % Nn;
    ++f;
    if (f > 64) throw std::invalid_argument("hd-ymult: q^d has no finite order mod Nn");
  }
  if (ipow(q, v.deg() * f) > (1LL << 12)) throw std::invalid_argument("hd-ymult: context too large");
  Poly nc = v.pow(f) - one_poly(v.field());
  auto ctx = wctx(q, v, nc, prec);
  Params p = ctx_params(q, v, nc);
  p.push_back({"N", std::to_string(N)});
  p.push_back({"mult", std::to_string(nmul)});
  p.push_back({"x", rat_str(x)});
  p.push_back({"y", y.str()});
  p.push_back({"prec", std::to_string(prec)});
  auto r = base_report("hd-ymult", p);
  AFrac xf = frac_of(*ctx, x);
  Series lhs = ctx->W.one();
  for (long long i = 0; i < nmul; ++i)
    lhs = lhs * gauss_monomial(*ctx, xf, prat_qdigits((y + PRat::integer(i)).div(nmul), q, ctx->dl));
  Series rhs = gauss_monomial(*ctx, xf, ones(q, ctx->dl)).pow((nmul - 1) * (q - 1) / 2) *
               gauss_monomial(*ctx, xf, prat_qdigits(y, q, ctx->dl));
  set_series(r, lhs, rhs, prec);
  return r;
}

VerificationReport verify_hd_lifting(int q, const Poly& v, const Poly& n, const Poly& n2, const AFrac& x,
                                     const QDigits& y, long long prec) {
  auto c1 = wctx(q, v, n, prec);
  auto c2 = wctx(q, v, n2, prec);
  if (!n.divides(n2)) throw std::invalid_argument("hd-lifting: n must divide n'");
  const int m = c2->l / c1->l;
  Params p = ctx_params(q, v, n);
  p.push_back({"n2", n2.str()});
  p.push_back({"x", x.str()});
  p.push_back({"y", y.str()});
  p.push_back({"prec", std::to_string(prec)});
  auto r = base_report("hd-lifting", p);
  QDigits y2;
  y2.q = q;
  y2.t = c2->dl;
  for (int k = 0; k < m; ++k) y2.digits.insert(y2.digits.end(), y.digits.begin(), y.digits.end());
  auto emb = context_embedding(*c1, *c2);
  Series rhs = gauss_monomial(*c1, x, y).map_field(*emb).pow(m);
  set_series(r, gauss_monomial(*c2, x, y2), rhs, prec);
  r.note = "m=" + std::to_string(m);
  return r;
}

// ---------------------------------------------------------------- Stickelberger

StickelbergerData stickelberger_data(const CyclotomicContext& ctx, const AFrac& x) {
  if (x.n != ctx.n) throw std::invalid_argument("stickelberger: x must have exact denominator n");
  const Poly& n = ctx.n;
  const int dl = ctx.dl;
  const FieldPtr& Fq = ctx.Fq;
  StickelbergerData out{GroupRingElem(n, dl), {}, {}, 0};
  for (int i = 0; i < n.deg(); ++i)
    for (const Poly& a : enumerate_monic(Fq, i)) {
      if (!gcd(a, n).is_one()) continue;
      out.eta.add(x.a0 * invmod(a, n), n.deg() - a.deg(), 1);
    }
  const auto U = units_mod(n);
  std::set<GroupRingElem::Key> seen;
  auto label = [&](const Poly& c, long long t) { return "(" + c.str() + "," + std::to_string(t) + ")"; };
  for (const Poly& c : U)
    for (int t = 0; t < dl; ++t) {
      GroupRingElem probe(n, dl);
      probe.add(c, t, 1);
      if (seen.count(probe.terms().begin()->first)) continue;
      long long expected = 0;
      Poly cv = c;
      for (int j = 0; j < ctx.l; ++j) {
        const long long tj = t + static_cast<long long>(ctx.d) * j;
        GroupRingElem k(n, dl);
        k.add(cv, tj, 1);
        if (seen.insert(k.terms().begin()->first).second) expected += out.eta.coeff(cv, tj);
        cv = (cv * ctx.v) % n;
      }
      Rational val = valuation(geo_gauss_value(ctx, x, invmod(c, n), -t));
      out.expected.push_back({label(c, t), expected});
      out.measured.push_back({label(c, t), val.den == 1 ? val.num : -1000000});
    }
  for (Elem e = 1; e < static_cast<Elem>(ctx.q); ++e)
    for (int s = 0; s < dl; ++s) {
      Rational val = valuation(geo_gauss_value(ctx, x, Poly::constant(Fq, e), s));
      out.exponent_sum += val.num / val.den;
    }
  return out;
}

VerificationReport verify_stickelberger(int q, const Poly& v, const AFrac& x, long long prec) {
  auto ctx = wctx(q, v, x.n, prec);
  Params p = ctx_params(q, v, x.n);
  p.push_back({"x", x.str()});
  p.push_back({"prec", std::to_string(prec)});
  auto r = base_report("stickelberger", p);
  auto data = stickelberger_data(*ctx, x);
  std::vector<long long> ev, mv;
  for (const auto& e : data.expected) ev.push_back(e.second);
  for (const auto& e : data.measured) mv.push_back(e.second);
  r.lhs = vec_str(mv);
  r.rhs = vec_str(ev);
  r.achieved_precision = prec;
  r.status = ev == mv ? Status::Pass : Status::Fail;
  long long count = 0;
  for (int i = 0; i < x.n.deg(); ++i)
    for (const Poly& a : enumerate_monic(ctx->Fq, i))
      if (gcd(a, x.n).is_one()) ++count;
  fold_bool(r, data.eta.total() == count, "eta coefficient sum");
  fold_bool(r, data.exponent_sum == ctx->l, "exponent sum = l");
  // G_l(x) O_n = P_n^{eta_{x,n}}: primes of K_n over v are indexed by U / <v>.
  const auto U = units_mod(x.n);
  std::set<std::uint64_t> seen;
  bool mono = true;
  for (const Poly& c : U) {
    if (seen.count(c.index())) continue;
    long long expected = 0;
    Poly cv = c;
    for (int j = 0; j < ctx->l; ++j) {
      if (!seen.insert(cv.index()).second) break;
      for (int i = 0; i < x.n.deg(); ++i)
        for (const Poly& a : enumerate_monic(ctx->Fq, i))
          if (gcd(a, x.n).is_one() && (x.a0 * invmod(a, x.n)) % x.n == cv) ++expected;
      cv = (cv * v) % x.n;
    }
    long long measured = 0;
    const Poly ci = invmod(c, x.n);
    for (int s = 0; s < ctx->dl; ++s) {
      Rational val = valuation(geo_gauss_value(*ctx, x, ci, s));
      measured += val.num / val.den;
    }
    if (measured != expected) mono = false;
  }
  fold_bool(r, mono, "monomial factorization in K_n");
  r.note += std::string(r.note.empty() ? "" : "; ") + "eta=" + data.eta.str();
  return r;
}

// ---------------------------------------------------------------- infinity

VerificationReport verify_infinity(int q, const Poly& v, const Poly& n, const AFrac& x, long long prec) {
  auto ctx = wctx(q, v, n, prec);
  Params p = ctx_params(q, v, n);
  p.push_back({"x", x.str()});
  p.push_back({"prec", std::to_string(prec)});
  auto r = base_report("infinity", p);
  if (x.is_zero()) throw std::invalid_argument("infinity: x must not lie in A");
  const Field& F = *ctx->F;
  InfRing R = make_inf_ring(ctx->F, prec + 4);
  const Elem w = estar_reduction(*ctx, x);
  Series mono = R.one();
  std::vector<long long> idx;
  std::vector<long long> leads, expect;
  bool ok = true;
  for (int s = 0; s < ctx->dl; ++s) {
    Series G = gauss_at_infinity(*ctx, x, s, R);
    SignOrd so = sign_and_ord(G, q);
    idx.push_back(so.index);
    if (!(so.ord == Rational{-1, q - 1})) ok = false;
    const Elem e = F.neg(F.frob(w, s));
    leads.push_back(elem_int(so.lead));
    expect.push_back(elem_int(e));
    if (!(so.sign == InfSign::make(ctx->F, q, e, 1))) ok = false;
    mono = mono * G;
  }
  r.lhs = "index=" + vec_str(idx) + ";lead=" + vec_str(leads);
  r.rhs = "index=-1;lead=" + vec_str(expect);
  r.achieved_precision = prec;
  r.status = ok ? Status::Pass : Status::Fail;
  SignOrd sm = sign_and_ord(mono, q);
  fold_bool(r, sm.ord == Rational{-ctx->dl, q - 1}, "monomial valuation");
  const Elem nr = F.pow(w, (ipow(q, ctx->dl) - 1) / (q - 1));
  const Elem sgn = ctx->dl % 2 == 0 ? nr : F.neg(nr);
  fold_bool(r, sm.sign == InfSign::make(ctx->F, q, sgn, ctx->dl), "monomial sign");
  // Reflection read at infinity.
  Series P = R.one();
  for (Elem e = 1; e < static_cast<Elem>(q); ++e) {
    AFrac ex = a_fractional(x.value() * RatFunc(Poly::constant(ctx->Fq, e)));
    for (int s = 0; s < ctx->dl; ++s) P = P * gauss_at_infinity(*ctx, ex, s, R);
  }
  fold(r, compare_inf(P, R.embed(v.pow(ctx->l)), prec), "reflection at infinity");
  return r;
}

// ---------------------------------------------------------------- pairings

PairingTables pairing_tables(const CyclotomicContext& ctx) {
  const OreData& od = ore_data(ctx);
  const int N = static_cast<int>(od.lambdas.size());
  FieldPtr Fq = ctx.Fq;
  PairingTables t;
  t.residue.assign(N, std::vector<long long>(N, 0));
  t.trace = t.residue;
  t.poonen = t.residue;
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      t.residue[i][j] = elem_int(residue_map(od.fam.a[i] * od.fam.b[j], ctx.m));
      auto [tr, nm] = trace_norm(FFElem(ctx.F, ctx.F->mul(od.star_bars[i], od.lambda_bars[j])), Fq);
      (void)nm;
      t.trace[i][j] = elem_int(tr.v);
      auto pp = poonen_pair(od.stars[i], od.lambdas[j], ctx.m, ctx.W, ctx.prec / 2);
      if (!pp) {
        t.poonen_recognised = false;
        t.poonen[i][j] = -1;
      } else {
        t.poonen[i][j] = elem_int(*pp);
      }
    }
  return t;
}

namespace {

std::vector<std::vector<long long>> identity(int N) {
  std::vector<std::vector<long long>> I(N, std::vector<long long>(N, 0));
  for (int i = 0; i < N; ++i) I[i][i] = 1;
  return I;
}

// A few a0 of degree < dl: 1, theta, theta + 1, theta^{dl-1}.
std::vector<Poly> abp_samples(const CyclotomicContext& ctx) {
  const std::uint64_t count = static_cast<std::uint64_t>(ipow(ctx.q, ctx.dl));
  std::vector<Poly> out;
  for (std::uint64_t idx : {std::uint64_t{1}, static_cast<std::uint64_t>(ctx.q), static_cast<std::uint64_t>(ctx.q + 1),
                            count / static_cast<std::uint64_t>(ctx.q)}) {
    if (idx >= count) continue;
    Poly a = Poly::from_index(ctx.Fq, idx);
    if (std::find(out.begin(), out.end(), a) == out.end()) out.push_back(a);
  }
  return out;
}

template <class Ring>
Series abp_lhs(const Ring& R, const std::vector<Series>& stars, const std::vector<Series>& lambdas, const Poly& a0,
               int N) {
  Series acc = R.zero();
  for (size_t i = 0; i < stars.size(); ++i) acc = acc + stars[i].frob(N) * carlitz_eval(a0, lambdas[i], R);
  return acc;
}

template <class Ring>
Series abp2_lhs(const Ring& R, const std::vector<Series>& stars, const std::vector<Series>& lambdas, const Poly& a0,
                int degm) {
  Series acc = R.zero();
  for (size_t i = 0; i < stars.size(); ++i)
    acc = acc + stars[i] * carlitz_eval(a0, lambdas[i], R).frob(degm - a0.deg());
  return acc;
}

}  // namespace

VerificationReport verify_pairings(int q, const Poly& v, const Poly& n, long long prec, bool at_infinity) {
  auto ctx = wctx(q, v, n, prec);
  Params p = ctx_params(q, v, n);
  p.push_back({"completion", at_infinity ? "infinity" : "v"});
  p.push_back({"prec", std::to_string(prec)});
  auto r = base_report(at_infinity ? "pairings-infinity" : "pairings", p);
  const OreData& od = ore_data(*ctx);
  const int dl = ctx->dl;
  auto I = identity(dl);
  PairingTables t = pairing_tables(*ctx);
  r.lhs = "res=" + table_str(t.residue);
  r.rhs = "identity(" + std::to_string(dl) + ")";
  r.achieved_precision = prec;
  r.status = t.residue == I ? Status::Pass : Status::Fail;
  auto samples = abp_samples(*ctx);
  if (!at_infinity) {
    fold_bool(r, t.trace == I, "trace table");
    auto negI = I;
    for (int i = 0; i < dl; ++i) negI[i][i] = elem_int(ctx->Fq->neg(1));
    fold_bool(r, t.poonen_recognised && t.poonen == negI, "poonen table");
    for (const Series& s : od.stars)
      fold(r, compare_series(adjoint_eval_raised(ctx->m, s, ctx->W), ctx->W.zero(), prec), "Ore duals are adjoint torsion");
    for (int N = 0; N <= 5; ++N)
      for (const Poly& a0 : samples) {
        Series rhs = -ctx->W.embed(psi_n_eval(N, RatFunc(a0, ctx->m)));
        fold(r, compare_series(abp_lhs(ctx->W, od.stars, od.lambdas, a0, N), rhs, prec),
             "duality N=" + std::to_string(N) + " a0=" + a0.str());
      }
    for (const Poly& a0 : samples)
      if (a0.is_monic())
        fold(r, compare_series(abp2_lhs(ctx->W, od.stars, od.lambdas, a0, dl), ctx->W.one(), prec),
             "monic duality a0=" + a0.str());
    return r;
  }
  // At infinity lambda_j = e(b_j/m) and lambda_i^* = e*(a_i/m)^q.
  InfRing R = make_inf_ring(Field::get(q, 1), 2 * prec + 8);
  std::vector<Series> lam, st;
  for (const Poly& b : od.fam.b) lam.push_back(e_eval(R, RatFunc(b, ctx->m)));
  for (const Poly& a : od.fam.a) st.push_back(estar_eval(R, RatFunc(a, ctx->m)).frob(1));
  auto ore = ore_lambda_stars(R, lam);
  for (int i = 0; i < dl; ++i) fold(r, compare_inf(ore[i], st[i], prec), "Ore formula i=" + std::to_string(i + 1));
  // h_a(b) cancels terms of valuation down to about -(q-1) dl q^{dl}.
  InfRing RP = make_inf_ring(Field::get(q, 1), 2 * prec + 8 + (q - 1) * dl * ipow(q, dl));
  std::vector<Series> lamP, stP;
  for (const Poly& b : od.fam.b) lamP.push_back(e_eval(RP, RatFunc(b, ctx->m)));
  for (const Poly& a : od.fam.a) stP.push_back(estar_eval(RP, RatFunc(a, ctx->m)).frob(1));
  bool poon = true;
  for (int i = 0; i < dl; ++i)
    for (int j = 0; j < dl; ++j) {
      auto pp = poonen_pair(stP[i], lamP[j], ctx->m, RP, 0);
      Elem want = i == j ? ctx->Fq->neg(1) : 0;
      if (!pp || *pp != want) poon = false;
    }
  fold_bool(r, poon, "poonen table at infinity");
  for (int N = 0; N <= 5; ++N)
    for (const Poly& a0 : samples) {
      Series rhs = -R.embed(psi_n_eval(N, RatFunc(a0, ctx->m)));
      fold(r, compare_inf(abp_lhs(R, st, lam, a0, N), rhs, prec), "duality at infinity N=" + std::to_string(N));
    }
  for (const Poly& a0 : samples)
    if (a0.is_monic()) fold(r, compare_inf(abp2_lhs(R, st, lam, a0, dl), R.one(), prec), "monic duality at infinity");
  return r;
}

// ---------------------------------------------------------------- gamma functional equations

std::string gamma_eq_name(GammaEq e) {
  switch (e) {
    case GammaEq::Reflection1:
      return "gamma-reflection-1";
    case GammaEq::Reflection2:
      return "gamma-reflection-2";
    case GammaEq::NoCarry:
      return "gamma-nocarry";
    case GammaEq::Multiplication:
      return "gamma-multiplication";
    case GammaEq::MultiplicationSquared:
      return "gamma-multiplication-squared";
    case GammaEq::Translation:
      return "gamma-translation";
    case GammaEq::Levels:
      return "gamma-levels";
  }
  return "gamma";
}

VerificationReport verify_gamma_functional(GammaEq eq, const GammaParams& gp, long long prec) {
  const int q = gp.q;
  const GammaEngine& E = standalone_engine(q, gp.v, prec);
  const FieldPtr& Fq = gp.v.field();
  Params p = {{"q", std::to_string(q)}, {"v", gp.v.str()}, {"x", rat_str(gp.x)}};
  if (eq != GammaEq::Levels) p.push_back({"y", gp.y.str()});
  if (eq == GammaEq::NoCarry) p.push_back({"y2", gp.y2.str()});
  if (eq == GammaEq::Multiplication || eq == GammaEq::MultiplicationSquared) p.push_back({"mult", std::to_string(gp.n)});
  if (eq == GammaEq::Translation) p.push_back({"g", gp.g.str()});
  p.push_back({"prec", std::to_string(prec)});
  auto r = base_report(gamma_eq_name(eq), p);
  const RatFunc& x = gp.x;
  const PRat one = PRat::integer(1);
  const Series xf = E.flat(x);
  const int d = gp.v.deg();
  switch (eq) {
    case GammaEq::Reflection1: {
      Series lhs = E.gamma_two(x, gp.y) * E.gamma_two(x, one - gp.y);
      Series rhs = xf.pow(q - 3) * E.gamma_geo(x).pow(q - 1);
      if ((d - 1) % 2 != 0) rhs = -rhs;
      set_series(r, lhs, rhs, prec);
      break;
    }
    case GammaEq::Reflection2: {
      Series lhs = E.ring().one();
      for (Elem e = 1; e < static_cast<Elem>(q); ++e) {
        RatFunc ex = x * RatFunc(Poly::constant(Fq, e));
        lhs = lhs * E.gamma_two(ex, gp.y) * E.gamma_two(ex, one - gp.y);
      }
      set_series(r, lhs, xf.inv().pow(q - 1), prec);
      break;
    }
    case GammaEq::NoCarry: {
      DigitStream a = gp.y.digits(q), b = gp.y2.digits(q);
      for (long long i = 0; i <= E.i_max() + d; ++i)
        if (a[i] + b[i] >= q) throw std::invalid_argument("gamma-nocarry: y and y' carry");
      Series lhs = E.gamma_two(x, one + gp.y + gp.y2);
      Series rhs = xf * E.gamma_two(x, one + gp.y) * E.gamma_two(x, one + gp.y2);
      set_series(r, lhs, rhs, prec);
      break;
    }
    case GammaEq::Multiplication:
    case GammaEq::MultiplicationSquared: {
      const long long n = gp.n;
      if (n < 1 || n % Field::get(q, 1)->p() == 0) throw std::invalid_argument("gamma-multiplication: n must be prime to p");
      Series lhs = E.ring().one();
      for (long long i = 0; i < n; ++i) lhs = lhs * E.gamma_two(x, (gp.y + PRat::integer(i)).div(n));
      const Series base = xf.inv().pow(n - 1) * E.gamma_two(x, gp.y);
      const Series full = E.pi_geo(x, PRat(-1, 1).digits(q)) / E.pi_ari(PRat(-1, 1).digits(q));
      if (eq == GammaEq::MultiplicationSquared) {
        set_series(r, lhs.pow(2), base.pow(2) * full.pow(n - 1), prec);
      } else if (n % 2 == 1) {
        set_series(r, lhs, base * full.pow((n - 1) / 2), prec);
      } else {
        const Series half = E.pi_geo(x, PRat(-1, 2).digits(q)) / E.pi_ari(PRat(-1, 2).digits(q));
        fold(r, compare_series(half.pow(2), full, prec), "square root branch");
        set_series(r, lhs, base * half.pow(n - 1), prec);
        r.note = "square root Pi^geo(x,-1/2)/Pi^ari(-1/2)";
      }
      break;
    }
    case GammaEq::Translation: {
      const Poly& g = gp.g;
      if (!g.is_monic() || !gcd(g, gp.v).is_one()) throw std::invalid_argument("gamma-translation: g must be monic, prime to v");
      const int h = g.deg();
      Series lhs = E.ring().one();
      const DigitStream yd = gp.y.digits(q);
      for (const Poly& a : enumerate_below(Fq, h))
        lhs = lhs * E.pi_two((x + RatFunc(a)) / RatFunc(g), yd);
      const DigitStream yh = yd.shifted(h);
      Poly x0 = (x.num() * invmod(x.den(), gp.v)) % gp.v;
      const int ip = x0.deg();
      const bool delta = !x0.is_zero() && h <= ip && ip < d && x0.lead() == Fq->neg(1);
      long long m = 0;
      for (int i = h; i < d; ++i) m += yd[i - h] * ipow(q, i);
      const long long gexp = m - (delta ? yd[ip - h] : 0);
      const Series gs = E.ring().embed(g);
      Series rhs = E.pi_two(x, yh) * gs.pow(gexp) * E.one_unit_pow(gs.pow(ipow(q, d) - 1), yh.shifted(-d));
      set_series(r, lhs, rhs, prec);
      r.note = std::string("delta_x=") + (delta ? "1" : "0") + ";m=" + std::to_string(m);
      break;
    }
    case GammaEq::Levels: {
      r.status = Status::Pass;
      r.achieved_precision = prec;
      std::vector<long long> bad;
      int checked = 0;
      for (int i = 0; i <= 6 && ipow(q, i) <= 729; ++i) {
        Series a = E.flat_level(i, x), b = E.flat_level_brute(i, x);
        fold(r, compare_series(a, b, prec), "level " + std::to_string(i));
        ++checked;
      }
      r.lhs = "fast levels 0.." + std::to_string(checked - 1);
      r.rhs = "brute force";
      break;
    }
  }
  return r;
}

// ---------------------------------------------------------------- grid and suites

std::vector<GridPoint> default_grid() {
  std::vector<GridPoint> out;
  for (int q : {2, 3}) {
    FieldPtr F = Field::get(q, 1);
    std::vector<Poly> vs, ns;
    for (int d = 1; d <= 2; ++d)
      for (const Poly& v : enumerate_monic(F, d))
        if (is_irreducible(v)) vs.push_back(v);
    for (int d = 1; d <= 2; ++d)
      for (const Poly& n : enumerate_monic(F, d)) ns.push_back(n);
    for (const Poly& v : vs)
      for (const Poly& n : ns) {
        if (!gcd(v, n).is_one()) continue;
        const int l = order_mod(v, n);
        if (ipow(q, static_cast<long long>(v.deg()) * l) > (1LL << 12)) continue;
        out.push_back({q, v, n});
      }
  }
  return out;
}

std::vector<AFrac> grid_fractions(const Poly& n, bool skip_zero) {
  std::vector<AFrac> out;
  for (const Poly& a0 : enumerate_below(n.field(), n.deg())) {
    if (skip_zero && a0.is_zero()) continue;
    out.push_back(a0.is_zero() ? AFrac{a0, one_poly(n.field())} : a_fractional(RatFunc(a0, n)));
  }
  return out;
}

std::vector<std::string> all_suite_ids() {
  return {"worked-example", "oracle", "reflection", "tilde", "compatibility", "gkt", "hd", "stickelberger",
          "pairings", "infinity", "gamma"};
}

namespace {

std::vector<GridPoint> points_of(const SuiteOptions& o) {
  if (o.point) return {*o.point};
  std::vector<GridPoint> out;
  for (auto& g : default_grid())
    if (!o.q || g.q == *o.q) out.push_back(std::move(g));
  return out;
}

std::vector<AFrac> xs_of(const SuiteOptions& o, const GridPoint& g, bool skip_zero) {
  if (o.x) return {*o.x};
  return grid_fractions(g.n, skip_zero);
}

std::vector<QDigits> ys_of(const SuiteOptions& o, int q, int dl) {
  if (o.y) {
    if (o.y->t == dl) return {*o.y};
    return {prat_qdigits(PRat(o.y->numerator(), o.y->denominator()), q, dl)};
  }
  std::vector<QDigits> out{ones(q, dl)};
  // single nonzero digit in the top position
  QDigits s = q_digits(q, (q > 2 ? 2 : 1) * ipow(q, dl - 1), dl);
  if (!(s == out[0])) out.push_back(s);
  return out;
}

long long prec_of(const SuiteOptions& o, long long dflt) { return o.prec ? *o.prec : dflt; }

using Out = std::vector<VerificationReport>;

void run_worked(const SuiteOptions& o, Out& out) {
  std::vector<int> qs{3, 4};
  if (o.point) qs = {o.point->q};
  if (o.q) qs = {*o.q};
  for (int q : qs)
    for (Elem e = 1; e < static_cast<Elem>(q); ++e)
      out.push_back(with_retry([&](long long pr) { return verify_worked_example(q, e, pr); }, prec_of(o, 12)));
}

void run_oracle(const SuiteOptions& o, Out& out) {
  for (const auto& g : points_of(o))
    for (const AFrac& x : xs_of(o, g, false))
      out.push_back(with_retry([&](long long pr) { return verify_oracle(g.q, g.v, g.n, x, pr); }, prec_of(o, 8)));
}

void run_reflection(const SuiteOptions& o, Out& out) {
  for (const auto& g : points_of(o)) {
    const long long pr0 = prec_of(o, 12);
    auto ctx = get_context(g.q, g.v, g.n, pr0);
    for (const AFrac& x : xs_of(o, g, false)) {
      out.push_back(with_retry([&](long long pr) { return verify_reflection(g.q, g.v, g.n, x, pr); }, pr0));
      if (x.is_zero()) continue;
      for (const QDigits& y : ys_of(o, g.q, ctx->dl))
        out.push_back(
            with_retry([&](long long pr) { return verify_reflection_corollary(g.q, g.v, g.n, x, y, pr); }, pr0));
    }
  }
}

void run_tilde(const SuiteOptions& o, Out& out) {
  for (const auto& g : points_of(o))
    for (const AFrac& x : xs_of(o, g, true))
      out.push_back(with_retry([&](long long pr) { return verify_tilde(g.q, g.v, g.n, x, pr); }, prec_of(o, 8)));
}

void run_compatibility(const SuiteOptions& o, Out& out) {
  // n | n' with the same (q, v): n' = n times a coprime linear factor.
  for (const auto& g : points_of(o)) {
    if (g.n.deg() != 1) continue;
    const FieldPtr& F = g.v.field();
    for (const Poly& f : enumerate_monic(F, 1)) {
      Poly n2 = g.n * f;
      if (f == g.n || !gcd(n2, g.v).is_one()) continue;
      if (ipow(g.q, static_cast<long long>(g.v.deg()) * order_mod(g.v, n2)) > (1LL << 12)) continue;
      for (const AFrac& x : xs_of(o, g, true))
        out.push_back(
            with_retry([&](long long pr) { return verify_compatibility(g.q, g.v, g.n, n2, x, pr); }, prec_of(o, 8)));
      break;
    }
  }
}

void run_gkt(const SuiteOptions& o, Out& out) {
  for (const auto& g : points_of(o)) {
    const long long pr0 = prec_of(o, 8);
    auto ctx = get_context(g.q, g.v, g.n, pr0);
    const auto xs = xs_of(o, g, false);
    const auto ys = ys_of(o, g.q, ctx->dl);
    for (const AFrac& x : xs)
      for (int s = 0; s < ctx->dl; ++s)
        out.push_back(with_retry([&](long long pr) { return verify_gkt_first(g.q, g.v, g.n, x, s, pr); }, pr0));
    for (const AFrac& x : xs)
      for (const QDigits& y : ys)
        out.push_back(with_retry([&](long long pr) { return verify_gkt_geo(g.q, g.v, g.n, x, y, pr); }, pr0));
    for (const QDigits& y : ys)
      out.push_back(with_retry([&](long long pr) { return verify_gkt_ari(g.q, g.v, g.n, y, pr); }, pr0));
    for (const AFrac& x : xs)
      for (const QDigits& y : ys)
        out.push_back(with_retry([&](long long pr) { return verify_gkt_two(g.q, g.v, g.n, x, y, pr); }, pr0));
  }
}

struct HdCase {
  int q;
  std::string v, n, g;
};

void run_hd(const SuiteOptions& o, Out& out) {
  const long long pr0 = prec_of(o, 8);
  std::vector<HdCase> cases;
  if (o.point) {
    const auto& gpt = *o.point;
    for (const Poly& g : enumerate_monic(gpt.v.field(), 1)) {
      if (!gcd(g, gpt.v).is_one()) continue;
      const int f = order_mod(gpt.v, g * gpt.n);
      if (ipow(gpt.q, static_cast<long long>(gpt.v.deg()) * f) > (1LL << 12)) continue;
      cases.push_back({gpt.q, gpt.v.str(), gpt.n.str(), g.str()});
      break;
    }
  } else {
    cases = {{3, "01", "21", "11"}, {2, "01", "11", "111"}, {3, "101", "01", "11"}};
  }
  for (const auto& c : cases) {
    FieldPtr F = Field::get(c.q, 1);
    Poly v = Poly::parse(F, c.v), n = Poly::parse(F, c.n), g = Poly::parse(F, c.g);
    auto big = get_context(c.q, v, g * n, pr0);
    std::vector<AFrac> xs = o.x ? std::vector<AFrac>{*o.x} : grid_fractions(n, true);
    if (xs.size() > 2) xs.resize(2);
    const long long D = ipow(c.q, big->dl) - 1;
    std::vector<PRat> ys = {PRat(1, c.q - 1), PRat(1, D)};
    for (const AFrac& x : xs)
      for (const PRat& y : ys) {
        out.push_back(with_retry([&](long long pr) { return verify_hd_geo(c.q, v, n, g, x, y, pr); }, pr0));
        out.push_back(with_retry([&](long long pr) { return verify_hd_two(c.q, v, n, g, x, y, pr); }, pr0));
      }
  }
  struct YCase {
    int q;
    std::string v;
    long long N;
    std::string x;
    PRat y;
  };
  std::vector<YCase> ycases;
  if (o.point) {
    if (o.point->q == 3) {
      long long f = 1, acc = ipow(3, o.point->v.deg()) % 8;
      while (acc != 1) acc = acc * ipow(3, o.point->v.deg()) % 8, ++f;
      if (ipow(3, o.point->v.deg() * f) <= (1LL << 12)) ycases.push_back({3, o.point->v.str(), 4, "", PRat(1, 4)});
    }
  } else {
    ycases = {{3, "01", 4, "1/201", PRat(1, 4)}, {3, "101", 4, "1/001", PRat(3, 4)}, {3, "11", 2, "1/021", PRat(1, 2)}};
  }
  for (const auto& c : ycases) {
    FieldPtr F = Field::get(c.q, 1);
    Poly v = Poly::parse(F, c.v);
    RatFunc x;
    if (c.x.empty()) {
      long long f = 1, acc = ipow(c.q, v.deg()) % (2 * c.N);
      while (acc != 1) acc = acc * ipow(c.q, v.deg()) % (2 * c.N), ++f;
      x = RatFunc(one_poly(F), v.pow(f) - one_poly(F));
    } else {
      x = RatFunc::parse(F, c.x);
    }
    out.push_back(with_retry([&](long long pr) { return verify_hd_ymult(c.q, v, c.N, 2, x, c.y, pr); }, pr0));
  }
  struct LCase {
    int q;
    std::string v, n, n2;
  };
  std::vector<LCase> lcases;
  if (o.point) {
    const auto& gpt = *o.point;
    const int l = order_mod(gpt.v, gpt.n);
    for (const Poly& f : enumerate_monic(gpt.v.field(), 1)) {
      Poly n2 = gpt.n * f;
      if (!gcd(n2, gpt.v).is_one() || order_mod(gpt.v, n2) != 2 * l) continue;
      if (ipow(gpt.q, static_cast<long long>(gpt.v.deg()) * 2 * l) > (1LL << 12)) continue;
      lcases.push_back({gpt.q, gpt.v.str(), gpt.n.str(), n2.str()});
      break;
    }
  } else {
    lcases = {{3, "01", "21", "201"}, {2, "01", "11", "101"}, {3, "101", "01", "011"}};
  }
  for (const auto& c : lcases) {
    FieldPtr F = Field::get(c.q, 1);
    Poly v = Poly::parse(F, c.v), n = Poly::parse(F, c.n), n2 = Poly::parse(F, c.n2);
    auto small = get_context(c.q, v, n, pr0);
    std::vector<AFrac> xs = o.x ? std::vector<AFrac>{*o.x} : grid_fractions(n, true);
    if (xs.size() > 2) xs.resize(2);
    for (const AFrac& x : xs)
      for (const QDigits& y : ys_of(SuiteOptions{}, c.q, small->dl))
        out.push_back(with_retry([&](long long pr) { return verify_hd_lifting(c.q, v, n, n2, x, y, pr); }, pr0));
  }
}

void run_stickelberger(const SuiteOptions& o, Out& out) {
  std::set<std::string> done;
  for (const auto& g : points_of(o))
    for (const AFrac& x : xs_of(o, g, true)) {
      const std::string key = std::to_string(g.q) + g.v.str() + "|" + x.str();
      if (!done.insert(key).second) continue;
      out.push_back(with_retry([&](long long pr) { return verify_stickelberger(g.q, g.v, x, pr); }, prec_of(o, 8)));
    }
}

void run_pairings(const SuiteOptions& o, Out& out) {
  std::set<std::string> done;
  for (const auto& g : points_of(o)) {
    auto ctx = get_context(g.q, g.v, g.n, prec_of(o, 8));
    // The tables depend on m = v^l - 1 only.
    const std::string key = std::to_string(g.q) + "|" + ctx->m.str();
    if (!done.insert(key).second) continue;
    out.push_back(with_retry([&](long long pr) { return verify_pairings(g.q, g.v, g.n, pr, false); }, prec_of(o, 8)));
    if (ctx->dl <= 4)
      out.push_back(with_retry([&](long long pr) { return verify_pairings(g.q, g.v, g.n, pr, true); }, prec_of(o, 8)));
  }
}

void run_infinity(const SuiteOptions& o, Out& out) {
  for (const auto& g : points_of(o))
    for (const AFrac& x : xs_of(o, g, true))
      out.push_back(with_retry([&](long long pr) { return verify_infinity(g.q, g.v, g.n, x, pr); }, prec_of(o, 8)));
}

void run_gamma(const SuiteOptions& o, Out& out) {
  const long long pr0 = prec_of(o, 8);
  struct GCase {
    int q;
    std::string v, x;
  };
  std::vector<GCase> cases;
  if (o.point) {
    cases.push_back({o.point->q, o.point->v.str(), o.x ? o.x->value().str() : "1/" + o.point->n.str()});
  } else {
    cases = {{3, "01", "1/11"}, {2, "11", "1/01"}, {3, "101", "1/21"}, {2, "111", "01/11"}, {3, "01", "2"}};
  }
  for (const auto& c : cases) {
    FieldPtr F = Field::get(c.q, 1);
    GammaParams gp;
    gp.q = c.q;
    gp.v = Poly::parse(F, c.v);
    gp.x = RatFunc::parse(F, c.x);
    const long long q2 = static_cast<long long>(c.q) * c.q - 1;
    for (PRat y : {PRat(1, 5), PRat(2, 7), PRat(-3, 11)}) {
      gp.y = y;
      out.push_back(with_retry([&](long long pr) { return verify_gamma_functional(GammaEq::Reflection1, gp, pr); }, pr0));
      out.push_back(with_retry([&](long long pr) { return verify_gamma_functional(GammaEq::Reflection2, gp, pr); }, pr0));
    }
    gp.y = PRat(-1, q2);
    gp.y2 = PRat(-c.q, q2);
    out.push_back(with_retry([&](long long pr) { return verify_gamma_functional(GammaEq::NoCarry, gp, pr); }, pr0));
    gp.y = PRat::integer(1);
    gp.y2 = PRat::integer(c.q);
    out.push_back(with_retry([&](long long pr) { return verify_gamma_functional(GammaEq::NoCarry, gp, pr); }, pr0));
    for (long long n : {2LL, 3LL}) {
      if (n % F->p() == 0) continue;
      for (PRat y : {PRat(1, 5), PRat(-1, 7)}) {
        gp.n = n;
        gp.y = y;
        out.push_back(
            with_retry([&](long long pr) { return verify_gamma_functional(GammaEq::Multiplication, gp, pr); }, pr0));
        if (n % 2 == 0)
          out.push_back(with_retry(
              [&](long long pr) { return verify_gamma_functional(GammaEq::MultiplicationSquared, gp, pr); }, pr0));
      }
    }
    for (const Poly& g : {Poly::parse(F, "11"), Poly::parse(F, "01"), Poly::parse(F, c.q == 2 ? "111" : "101")}) {
      if (!gcd(g, gp.v).is_one()) continue;
      for (PRat y : {PRat(1, 5), PRat(-1, q2)}) {
        gp.g = g;
        gp.y = y;
        out.push_back(
            with_retry([&](long long pr) { return verify_gamma_functional(GammaEq::Translation, gp, pr); }, pr0));
      }
    }
    out.push_back(with_retry([&](long long pr) { return verify_gamma_functional(GammaEq::Levels, gp, pr); }, pr0));
    GammaParams g0 = gp;
    g0.x = RatFunc(Poly(F));
    out.push_back(with_retry([&](long long pr) { return verify_gamma_functional(GammaEq::Levels, g0, pr); }, pr0));
  }
  if (!o.point) {
    // x0 = 2 theta forces delta_x = 1 for h = 1 < d = 2.
    FieldPtr F = Field::get(3, 1);
    GammaParams gp;
    gp.q = 3;
    gp.v = Poly::parse(F, "101");
    gp.g = Poly::parse(F, "11");
    for (const char* xs : {"02", "02/11", "1/12"})
      for (PRat y : {PRat(1, 5), PRat(7, 8), PRat(5, 1)}) {
        gp.x = RatFunc::parse(F, xs);
        gp.y = y;
        out.push_back(
            with_retry([&](long long pr) { return verify_gamma_functional(GammaEq::Translation, gp, pr); }, pr0));
      }
  }
}

}  // namespace

std::vector<VerificationReport> run_suite(const std::string& id, const SuiteOptions& opt) {
  static const std::map<std::string, void (*)(const SuiteOptions&, Out&)> suites = {
      {"worked-example", run_worked}, {"oracle", run_oracle},         {"reflection", run_reflection},
      {"tilde", run_tilde},           {"compatibility", run_compatibility}, {"gkt", run_gkt},
      {"hd", run_hd},                 {"stickelberger", run_stickelberger}, {"pairings", run_pairings},
      {"infinity", run_infinity},     {"gamma", run_gamma}};
  Out out;
  if (id == "all") {
    for (const auto& s : all_suite_ids()) suites.at(s)(opt, out);
    return out;
  }
  auto it = suites.find(id);
  if (it != suites.end()) {
    it->second(opt, out);
    return out;
  }
  for (const auto& [name, fn] : suites) {
    if (id.rfind(name + "-", 0) != 0) continue;
    Out all;
    fn(opt, all);
    for (auto& r : all)
      if (r.theorem_id == id) out.push_back(std::move(r));
    if (out.empty()) break;
    return out;
  }
  throw std::invalid_argument("unknown theorem id '" + id + "'");
}

}  // namespace ffg
