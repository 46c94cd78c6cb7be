#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "ffgauss/affine_ring.hpp"

namespace ffg {

// C_a(z) = sum c_i z^{q^i}.
struct CarlitzCoeffs {
  Poly a;
  std::vector<Poly> c;
};

CarlitzCoeffs carlitz_coeffs(const Poly& a);

// Polynomial in z with coefficients in A; entry k is the coefficient of z^k.
using PolyA = std::vector<Poly>;

PolyA carlitz_as_poly(const Poly& a);
PolyA polya_mul(const PolyA& x, const PolyA& y);
// Exact division by a polynomial whose leading z-coefficient is 1.
PolyA polya_div_exact(const PolyA& x, const PolyA& y);
PolyA cyclotomic_poly(const Poly& n);
// Reduction of the coefficients through theta -> t in an extension field.
fpoly::P polya_reduce(const PolyA& f, const Field& G, Elem t);

int order_mod(const Poly& v, const Poly& n);

// Rings used with the generic evaluators expose:
//   using Value; Value zero() const; Value theta() const;
//   Value embed(const Poly&) const;
//   Value add(const Value&, const Value&) const;
//   Value mul(const Value&, const Value&) const;
//   Value frob(const Value&, int k) const;   // x^{q^k}
// and optionally frob_inv(x) for perfect rings.

template <class R>
std::vector<typename R::Value> embed_coeffs(const R& ring, const std::vector<Poly>& cs) {
  std::vector<typename R::Value> out;
  out.reserve(cs.size());
  for (const Poly& c : cs) out.push_back(ring.embed(c));
  return out;
}

// Carlitz coefficients of a computed inside the ring by Horner over
// C_theta = theta + tau; avoids building the (large) coefficients in A.
template <class R>
std::vector<typename R::Value> carlitz_coeffs_in(const R& ring, const Poly& a) {
  using V = typename R::Value;
  std::vector<V> cur;
  if (a.is_zero()) return cur;
  const V th = ring.theta();
  for (int k = a.deg(); k >= 0; --k) {
    std::vector<V> nxt(cur.size() + 1, ring.zero());
    for (size_t i = 0; i < cur.size(); ++i) {
      nxt[i] = ring.add(nxt[i], ring.mul(th, cur[i]));
      nxt[i + 1] = ring.add(nxt[i + 1], ring.frob(cur[i], 1));
    }
    nxt[0] = ring.add(nxt[0], ring.embed(Poly::constant(a.field(), a[k])));
    cur = std::move(nxt);
  }
  return cur;
}

// sum coeffs[i] z^{q^i}
template <class R>
typename R::Value apply_linear(const R& ring, const std::vector<typename R::Value>& coeffs,
                               const typename R::Value& z) {
  typename R::Value acc = ring.zero();
  typename R::Value zp = z;
  for (size_t i = 0; i < coeffs.size(); ++i) {
    if (i > 0) zp = ring.frob(zp, 1);
    acc = ring.add(acc, ring.mul(coeffs[i], zp));
  }
  return acc;
}

template <class R>
typename R::Value carlitz_eval(const Poly& a, const typename R::Value& z, const R& ring) {
  if (a.is_zero()) return ring.zero();
  return apply_linear(ring, carlitz_coeffs_in(ring, a), z);
}

// C*_a(z) = sum c_i^{q^-i} z^{q^-i}; needs an inverse Frobenius.
template <class R>
typename R::Value adjoint_eval(const Poly& a, const typename R::Value& z, const R& ring) {
  if (a.is_zero()) return ring.zero();
  auto cs = carlitz_coeffs_in(ring, a);
  typename R::Value acc = ring.zero();
  for (size_t i = 0; i < cs.size(); ++i) {
    typename R::Value t = ring.mul(cs[i], z);
    for (size_t k = 0; k < i; ++k) t = ring.frob_inv(t);
    acc = ring.add(acc, t);
  }
  return acc;
}

// C*_a(z)^{q^{deg a}} = sum c_i^{q^{deg a - i}} z^{q^{deg a - i}}; only q-th
// powers are needed, so this works on series rings.
template <class R>
typename R::Value adjoint_eval_raised(const Poly& a, const typename R::Value& z, const R& ring) {
  if (a.is_zero()) return ring.zero();
  auto cs = carlitz_coeffs_in(ring, a);
  const int D = a.deg();
  typename R::Value acc = ring.zero();
  for (int i = 0; i <= D; ++i) acc = ring.add(acc, ring.frob(ring.mul(cs[i], z), D - i));
  return acc;
}

// Twisted polynomial sum h_i tau^i with (alpha tau^i)(beta tau^j) = alpha beta^{q^i} tau^{i+j}.
template <class V>
struct TwistedPoly {
  std::vector<V> coeffs;
};

template <class R>
TwistedPoly<typename R::Value> twisted_mul(const R& ring, const TwistedPoly<typename R::Value>& x,
                                           const TwistedPoly<typename R::Value>& y) {
  TwistedPoly<typename R::Value> out;
  if (x.coeffs.empty() || y.coeffs.empty()) return out;
  out.coeffs.assign(x.coeffs.size() + y.coeffs.size() - 1, ring.zero());
  for (size_t i = 0; i < x.coeffs.size(); ++i)
    for (size_t j = 0; j < y.coeffs.size(); ++j)
      out.coeffs[i + j] =
          ring.add(out.coeffs[i + j], ring.mul(x.coeffs[i], ring.frob(y.coeffs[j], static_cast<int>(i))));
  return out;
}

// h with a C_n(tau) = (1 - tau) h(tau); `closure` receives e_N + h_{N-1}^q,
// which vanishes exactly when a is an adjoint n-torsion.
template <class R>
TwistedPoly<typename R::Value> poonen_h(const typename R::Value& a, const Poly& n, const R& ring,
                                        typename R::Value* closure = nullptr) {
  auto cs = carlitz_coeffs_in(ring, n);
  const size_t N = cs.size() - 1;
  TwistedPoly<typename R::Value> h;
  for (size_t i = 0; i < N; ++i) {
    typename R::Value e = ring.mul(a, cs[i]);
    h.coeffs.push_back(i == 0 ? e : ring.add(e, ring.frob(h.coeffs[i - 1], 1)));
  }
  if (closure) {
    typename R::Value eN = ring.mul(a, cs[N]);
    *closure = N == 0 ? eN : ring.add(eN, ring.frob(h.coeffs[N - 1], 1));
  }
  return h;
}

// <a, b>_Poon(n) = h_a(b), returned as a ring value (a constant for torsions).
template <class R>
typename R::Value poonen_value(const typename R::Value& a, const typename R::Value& b, const Poly& n,
                               const R& ring) {
  auto h = poonen_h(a, n, ring);
  return apply_linear(ring, h.coeffs, b);
}

}  // namespace ffg
