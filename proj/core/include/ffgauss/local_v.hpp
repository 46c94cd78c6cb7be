#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "ffgauss/affine_ring.hpp"
#include "ffgauss/carlitz_core.hpp"
#include "ffgauss/series.hpp"

namespace ffg {

// Finite field viewed as an A-algebra through theta -> t.
struct ResidueRing {
  using Value = Elem;
  FieldPtr F;
  Elem t = 0;

  Value zero() const { return 0; }
  Value one() const { return 1; }
  Value theta() const { return t; }
  Value embed(const Poly& a) const { return a.eval(*F, t); }
  Value add(Value a, Value b) const { return F->add(a, b); }
  Value sub(Value a, Value b) const { return F->sub(a, b); }
  Value mul(Value a, Value b) const { return F->mul(a, b); }
  Value div(Value a, Value b) const { return F->div(a, b); }
  Value frob(Value a, int k) const { return F->frob(a, k); }
  Value frob_inv(Value a) const { return F->frob(a, -1); }
};

// Series over a finite field with a fixed image T of theta.
struct SeriesRing {
  using Value = Series;
  FieldPtr F;
  Cap cap;
  int ram = 1;
  Series T;

  Value zero() const { return Series::zero(F, cap, ram); }
  Value one() const { return Series::constant(F, 1, cap, ram); }
  Value constant(Elem c) const { return Series::constant(F, c, cap, ram); }
  Value theta() const { return T; }
  Value embed(const Poly& a) const;
  Value embed(const RatFunc& x) const;
  Value add(const Value& a, const Value& b) const { return a + b; }
  Value sub(const Value& a, const Value& b) const { return a - b; }
  Value mul(const Value& a, const Value& b) const { return a * b; }
  Value div(const Value& a, const Value& b) const { return a / b; }
  Value frob(const Value& a, int k) const { return a.frob(k); }
  // Newton iteration for a root of sum f[k] X^k congruent to r0.
  Value hensel(const std::vector<Series>& f, const Series& r0) const;
};

// Unramified W = F_{q^m}[[v]] with theta -> the root of v(X) = V congruent to t0.
SeriesRing make_unramified(const Poly& v, const FieldPtr& F, Elem t0, long long prec);
// Ramified extension by u with u^{q^d - 1} = -v.
SeriesRing make_ramified(const SeriesRing& W, const Poly& v);
// Rewrites a v-series as a u-series (v = -u^e).
Series to_ramified(const Series& s, int e);

// v-normalised valuation (index divided by ram).
struct Rational {
  long long num = 0, den = 1;
  bool operator==(const Rational& o) const { return num * o.den == o.num * den; }
};
Rational valuation(const Series& x);

class CyclotomicContext;
struct OreData;
using ContextPtr = std::shared_ptr<const CyclotomicContext>;

// Fixed data (q, v, n, l, the prime P, lambda) shared by all v-adic
// Gauss-sum and gamma computations.
class CyclotomicContext {
 public:
  int q = 0;
  FieldPtr Fq;
  Poly v;
  int d = 0;
  Poly n;
  int l = 0;
  int dl = 0;
  Poly m;  // v^l - 1
  FieldPtr F;  // F_P = F_{q^{dl}}, also the constant field of W
  Elem t0 = 0;  // theta mod P
  long long prec = 0;
  SeriesRing W;
  ResidueRing FP;
  FieldPtr Fd;  // A/v = F_{q^d}
  fpoly::P factor_P;  // minimal polynomial of lambda-bar over A/v
  Elem lambda_bar = 0;
  Series lambda;  // Hensel lift of the chosen root of C_n^*
  Elem lambda_m_bar = 0;  // generator of C(F_P) with C_{m/n} image lambda_bar
  Series lambda_m;
  std::vector<Series> omega_table;  // indexed by residue

  // Gauss-sum value cache, keyed by (b index, s).
  mutable std::mutex mu;
  mutable std::map<std::pair<std::uint64_t, long long>, Series> gauss_cache;
  mutable std::shared_ptr<const SeriesRing> ram_ring;
  mutable std::shared_ptr<const Series> phi1;
  mutable std::shared_ptr<const OreData> ore;
};

ContextPtr make_context(int q, const Poly& v, const Poly& n, long long prec);

// psi: residues are already constants of W.
Elem teichmuller_psi(const CyclotomicContext& ctx, Elem z);
const Series& geometric_omega(const CyclotomicContext& ctx, Elem z);
// Newton iteration on C_m(X) = 0 starting from the constant z.
Series omega_newton(const CyclotomicContext& ctx, Elem z);

struct RamifiedData {
  std::shared_ptr<const SeriesRing> ring;
  Series varpi;
  Series phi1;
};
RamifiedData ramified_extend(const CyclotomicContext& ctx);

// Residue of a series (its constant digit); requires valuation >= 0.
Elem reduce(const Series& s);

}  // namespace ffg
