#include "ffgauss/local_inf.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace ffg {

Series InfRing::embed(const Poly& a) const {
  Series acc = zero();
  for (int k = a.deg(); k >= 0; --k) {
    acc = acc * T;
    if (a[k] != 0) acc = acc + constant(a[k]);
  }
  return acc;
}

Series InfRing::embed(const RatFunc& x) const {
  Series num = embed(x.num());
  if (x.den().is_one()) return num;
  return num / embed(x.den());
}

InfRing make_inf_ring(const FieldPtr& F, long long rel_prec) {
  if (rel_prec < 1) throw std::invalid_argument("make_inf_ring: precision must be positive");
  InfRing R;
  R.F = F;
  R.q = F->q();
  R.cap = Cap::relative(rel_prec);
  R.T = Series::monomial(F, F->neg(1), -(R.q - 1), R.cap, 0);
  return R;
}

Series carlitz_period(const InfRing& R) {
  const int q = R.q;
  // theta^{1-q^i} = X^{(q-1)(q^i-1)}.
  Series acc = Series::monomial(R.F, R.F->neg(1), -q, R.cap, 0);
  long long qi = q;
  while (true) {
    long long k = static_cast<long long>(q - 1) * (qi - 1);
    if (k >= R.cap.rel) break;
    Series f = R.one() - Series::monomial(R.F, 1, k, R.cap, 0);
    acc = acc / f;
    qi *= q;
  }
  return acc;
}

Series e_eval(const InfRing& R, const RatFunc& x) {
  AFrac fr = a_fractional(x);
  if (fr.is_zero()) return R.zero();
  const Series pi = carlitz_period(R);
  Series T = pi * R.embed(fr.value());
  const long long stop = T.valuation() + R.cap.rel;
  Series acc = T;
  Series th = R.theta();
  Series thq = th;
  for (int i = 1;; ++i) {
    thq = thq.frob(1);
    T = T.frob(1) / (thq - th);
    if (T.is_zero() || T.valuation() >= stop) break;
    acc = acc + T;
  }
  return acc;
}

std::vector<Series> omega_coeffs(const InfRing& R, int I) {
  const int q = R.q;
  const Field& F = *R.F;
  // Absolute X-precision that covers every c_i (index q^i) to relative cap.
  long long top = 1;
  for (int i = 0; i < I; ++i) top *= q;
  const long long M = top + R.cap.rel + 1;
  // prod_j (1 + t X^{(q-1)q^j}) as polynomials in t over F_q[X] mod X^M.
  std::vector<std::vector<Elem>> poly(I + 1, std::vector<Elem>(M, 0));
  poly[0][0] = 1;
  for (long long qj = 1; static_cast<long long>(q - 1) * qj < M; qj *= q) {
    const long long sh = static_cast<long long>(q - 1) * qj;
    for (int i = I; i >= 1; --i)
      for (long long k = M - 1; k >= sh; --k)
        if (poly[i - 1][k - sh] != 0) poly[i][k] = F.add(poly[i][k], poly[i - 1][k - sh]);
  }
  std::vector<Series> out;
  for (int i = 0; i <= I; ++i) {
    // theta~^{-1} = X shifts by one.
    out.push_back(Series::from_coeffs(R.F, 1, poly[i], M + 1, R.cap, 0));
  }
  return out;
}

Series estar_eval(const InfRing& R, const RatFunc& x) {
  AFrac fr = a_fractional(x);
  if (fr.is_zero()) return R.zero();
  const Poly& n = fr.n;
  const int q = R.q;
  int i0 = -1;
  Poly th = Poly::constant(n.field(), 1);
  for (int i = 0; i < n.deg() + 1 && i0 < 0; ++i) {
    if (residue_map(th * fr.a0, n) != 0) i0 = i;
    th = th * Poly::theta(n.field());
  }
  if (i0 < 0) throw std::logic_error("estar_eval: no nonzero residue");
  long long qi0 = 1;
  for (int i = 0; i < i0; ++i) qi0 *= q;
  const long long stop = qi0 + R.cap.rel;
  int I = i0;
  for (long long qi = qi0; qi < stop; qi *= q) ++I;
  auto c = omega_coeffs(R, I);
  Series acc = R.zero();
  Poly thi = Poly::constant(n.field(), 1);
  for (int i = 0; i <= I; ++i) {
    Elem r = residue_map(thi * fr.a0, n);
    if (r != 0) acc = acc + c[i].scale(r);
    thi = (thi * Poly::theta(n.field())) % n;
  }
  return acc;
}

namespace {

std::optional<Elem> recognise_constant(const Series& x, long long threshold) {
  if (x.prec() <= threshold) return std::nullopt;
  if (x.is_zero()) return Elem{0};
  if (x.val() < 0) return std::nullopt;
  for (long long i = 1; i <= threshold; ++i)
    if (x.coeff(i) != 0) return std::nullopt;
  return x.coeff(0);
}

template <class R>
std::optional<Elem> pair_generic(const Series& a, const Series& b, const Poly& n, const R& ring,
                                 long long threshold) {
  Series v = poonen_value(a, b, n, ring);
  return recognise_constant(v, threshold);
}

}  // namespace

std::optional<Elem> poonen_pair(const Series& a, const Series& b, const Poly& n, const SeriesRing& ring,
                                long long threshold) {
  return pair_generic(a, b, n, ring, threshold);
}

std::optional<Elem> poonen_pair(const Series& a, const Series& b, const Poly& n, const InfRing& ring,
                                long long threshold) {
  return pair_generic(a, b, n, ring, threshold);
}

RatFunc psi_n_eval(int N, const RatFunc& z) {
  if (N < 0) throw std::invalid_argument("psi_n_eval: N must be nonnegative");
  const FieldPtr& F = z.field();
  // prod (a + z)/a = prod (a den + num) / (den^{q^N} prod a).
  Poly num = Poly::constant(F, 1), den = Poly::constant(F, 1);
  for_each_monic(F, N, [&](const Poly& a) {
    Poly f = a * z.den() + z.num();
    if (f.is_zero()) throw std::domain_error("psi_n_eval: pole at z = -a");
    num = num * f;
    den = den * a * z.den();
  });
  return RatFunc(num, den) - RatFunc(Poly::constant(F, 1));
}

InfSign InfSign::make(const FieldPtr& F, int q, Elem c, long long eta_exp) {
  const long long r = q - 1;
  long long j = eta_exp >= 0 ? eta_exp / r : -((-eta_exp + r - 1) / r);
  long long e = eta_exp - j * r;
  // eta^{q-1} = -1.
  if (j % 2 != 0) c = F->neg(c);
  return {F, q, c, static_cast<int>(e)};
}

InfSign InfSign::operator*(const InfSign& o) const {
  return make(F, q, F->mul(coeff, o.coeff), static_cast<long long>(eta_exp) + o.eta_exp);
}

InfSign InfSign::pow(long long k) const {
  if (k < 0) return InfSign::make(F, q, F->inv(coeff), -eta_exp).pow(-k);
  InfSign r = make(F, q, 1, 0), b = *this;
  while (k > 0) {
    if (k & 1) r = r * b;
    k >>= 1;
    if (k) b = b * b;
  }
  return r;
}

SignOrd sign_and_ord(const Series& x, int q) {
  if (x.is_zero()) throw std::domain_error("sign_and_ord: series indistinguishable from zero");
  SignOrd out;
  out.index = x.valuation();
  out.lead = x.lead();
  // x = c X^k = c theta~^{-k}, sgn(theta~) = eta.
  out.sign = InfSign::make(x.field(), q, x.lead(), -out.index);
  long long num = out.index, den = q - 1;
  long long g = std::gcd(num < 0 ? -num : num, den);
  if (g == 0) g = 1;
  out.ord = {num / g, den / g};
  return out;
}

}  // namespace ffg
