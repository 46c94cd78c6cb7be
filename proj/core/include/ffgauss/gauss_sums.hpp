#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ffgauss/affine_ring.hpp"
#include "ffgauss/local_inf.hpp"
#include "ffgauss/local_v.hpp"
#include "ffgauss/series.hpp"

namespace ffg {

struct GaussValue {
  ContextPtr ctx;
  AFrac x;
  Poly a;
  long long conj_s = 0;
  Series value;
};

// Canonical A-fractional representative of x, checked to lie in n^{-1}A for the context's n.
AFrac context_frac(const CyclotomicContext& ctx, const RatFunc& x);
// b = <a x>_inf (v^l - 1), an element of A of degree < dl.
Poly gauss_exponent(const CyclotomicContext& ctx, const AFrac& x, const Poly& a);

// The sigma_{a,s}-conjugate 1 + sum_z omega(C_b(z^{-1})) psi(z)^{q^s}.
GaussValue geo_gauss(const ContextPtr& ctx, const AFrac& x, const Poly& a, long long s);
Series geo_gauss_value(const CyclotomicContext& ctx, const AFrac& x, const Poly& a, long long s);
// Same sum keyed directly by the exponent b.
Series geo_gauss_by_exponent(const CyclotomicContext& ctx, const Poly& b, long long s);

// m-dual families with the torsion bases lambda_i = C_{b_i}(lambda_m) and
// their Ore duals, all in W.
struct OreData {
  DualFamilies fam;
  std::vector<Series> lambdas;
  std::vector<Series> stars;
  std::vector<Elem> lambda_bars;
  std::vector<Elem> star_bars;
};
const OreData& ore_data(const CyclotomicContext& ctx);

// 1 - sum_i C_{m x}(lambda_i) psi(reduction of lambda_i^*).
Series scalar_product_oracle(const CyclotomicContext& ctx, const AFrac& x);

// prod_s (G_x^{tau^s})^{y_s}, y with denominator q^{dl} - 1.
Series gauss_monomial(const CyclotomicContext& ctx, const AFrac& x, const QDigits& y);
// -sum_z omega(C_b(z^{-1})) psi(Tr_{F_P / A/v}(z)).
Series tilde_gauss(const CyclotomicContext& ctx, const AFrac& x);
// The same quantity from sum_{i<l} (1 - G)^{tau^{di}}.
Series tilde_from_conjugates(const CyclotomicContext& ctx, const AFrac& x);

// tau^s-conjugate of -sum_{z in (A/v)^x} chi(z^{-1}) phi(z), in the ramified ring.
Series ari_gauss(const CyclotomicContext& ctx, long long s);
Series ari_monomial(const CyclotomicContext& ctx, const QDigits& y);
Series geo_monomial_ramified(const CyclotomicContext& ctx, const AFrac& x, const QDigits& y);
Series two_var_monomial(const CyclotomicContext& ctx, const AFrac& x, const QDigits& y);

// Integer combination of symbols sigma_{a,s}, a a unit mod n, s mod dl.
class GroupRingElem {
 public:
  GroupRingElem(Poly n, int dl) : n_(std::move(n)), dl_(dl) {}
  using Key = std::pair<std::uint64_t, int>;  // (index of a mod n, s mod dl)

  void add(const Poly& a, long long s, long long c);
  long long coeff(const Poly& a, long long s) const;
  GroupRingElem operator*(const GroupRingElem& o) const;
  GroupRingElem operator+(const GroupRingElem& o) const;
  long long total() const;
  const std::map<Key, long long>& terms() const { return terms_; }
  const Poly& n() const { return n_; }
  int dl() const { return dl_; }
  std::string str() const;

 private:
  Key key(const Poly& a, long long s) const;
  Poly n_;
  int dl_;
  std::map<Key, long long> terms_;
};

// prod (G^{sigma})^{c} over the terms.
Series act_on_gauss(const CyclotomicContext& ctx, const AFrac& x, const GroupRingElem& e);

// Units of A/n in index order.
std::vector<Poly> units_mod(const Poly& n);

// Infinity side.  G^{tau^s} as a Laurent series in theta~^{-1} over F_P:
// 1 + sum_{a != 0 mod m} e(b a / m) (C_a(lambda_m-bar)^{-1})^{q^s}.
Series gauss_at_infinity(const CyclotomicContext& ctx, const AFrac& x, long long s, const InfRing& R);
// Reduction of e*(x)^q at P, from the v-adic Ore duals.
Elem estar_reduction(const CyclotomicContext& ctx, const AFrac& x);

// Embedding of the context's constant field into a larger context's that
// sends t0 to t0'; used to compare values across moduli.
EmbeddingPtr context_embedding(const CyclotomicContext& small, const CyclotomicContext& big);

}  // namespace ffg
