#pragma once

#include <optional>
#include <vector>

#include "ffgauss/affine_ring.hpp"
#include "ffgauss/carlitz_core.hpp"
#include "ffgauss/local_v.hpp"
#include "ffgauss/series.hpp"

namespace ffg {

// Laurent series in X = theta~^{-1} with theta~^{q-1} = -theta, so
// theta = -X^{-(q-1)}. Precision is relative (digits past the valuation).
struct InfRing {
  using Value = Series;
  FieldPtr F;
  int q = 0;
  Cap cap;
  Series T;  // theta

  Value zero() const { return Series::zero(F, cap, 0); }
  Value one() const { return Series::constant(F, 1, cap, 0); }
  Value constant(Elem c) const { return Series::constant(F, c, cap, 0); }
  Value theta() const { return T; }
  Value theta_tilde() const { return Series::monomial(F, 1, -1, cap, 0); }
  Value embed(const Poly& a) const;
  Value embed(const RatFunc& x) const;
  Value add(const Value& a, const Value& b) const { return a + b; }
  Value sub(const Value& a, const Value& b) const { return a - b; }
  Value mul(const Value& a, const Value& b) const { return a * b; }
  Value div(const Value& a, const Value& b) const { return a / b; }
  Value frob(const Value& a, int k) const { return a.frob(k); }
};

InfRing make_inf_ring(const FieldPtr& F, long long rel_prec);

Series carlitz_period(const InfRing& R);
// e(x) = sum (pi~ x)^{q^i} / D_i, evaluated on the fractional part of x.
Series e_eval(const InfRing& R, const RatFunc& x);
// Coefficients c_0..c_I of Omega^{(-1)}(t) = theta~^{-1} prod_{j>=0} (1 - t/theta^{q^j}).
std::vector<Series> omega_coeffs(const InfRing& R, int I);
// e*(x) = sum_i Res(theta^i x) c_i.
Series estar_eval(const InfRing& R, const RatFunc& x);

// Moore determinant det(x_j^{q^{i-1}}) together with the minors obtained by
// deleting one column (the Delta_i of Ore's formula).
template <class R>
std::pair<typename R::Value, std::vector<typename R::Value>> moore_minors(
    const R& ring, const std::vector<typename R::Value>& xs) {
  using V = typename R::Value;
  const int n = static_cast<int>(xs.size());
  std::vector<std::vector<V>> pw(n, std::vector<V>(n, ring.zero()));
  for (int j = 0; j < n; ++j) {
    pw[0][j] = xs[j];
    for (int i = 1; i < n; ++i) pw[i][j] = ring.frob(pw[i - 1][j], 1);
  }
  // det[S] = determinant of rows 0..|S|-1 on the columns of S.
  std::vector<V> det(static_cast<size_t>(1) << n, ring.zero());
  det[0] = ring.one();
  for (unsigned S = 1; S < (1u << n); ++S) {
    const int k = __builtin_popcount(S);
    V acc = ring.zero();
    int idx = 0;
    for (int j = 0; j < n; ++j) {
      if (!(S & (1u << j))) continue;
      V term = ring.mul(pw[k - 1][j], det[S & ~(1u << j)]);
      acc = ((k - 1 + idx) % 2 == 0) ? ring.add(acc, term) : ring.sub(acc, term);
      ++idx;
    }
    det[S] = acc;
  }
  const unsigned full = (1u << n) - 1;
  std::vector<V> minors;
  for (int i = 0; i < n; ++i) minors.push_back(det[full & ~(1u << i)]);
  return {det[full], minors};
}

template <class R>
typename R::Value moore_det(const R& ring, const std::vector<typename R::Value>& xs) {
  return moore_minors(ring, xs).first;
}

// All lambda_i^* = (-1)^{n+i} (Delta_i / Delta)^q, i = 1..n.
template <class R>
std::vector<typename R::Value> ore_lambda_stars(const R& ring, const std::vector<typename R::Value>& lambdas) {
  auto [D, minors] = moore_minors(ring, lambdas);
  const int n = static_cast<int>(lambdas.size());
  std::vector<typename R::Value> out;
  for (int i = 1; i <= n; ++i) {
    auto v = ring.frob(ring.div(minors[i - 1], D), 1);
    out.push_back((n + i) % 2 == 0 ? v : ring.sub(ring.zero(), v));
  }
  return out;
}

template <class R>
typename R::Value ore_lambda_star(const R& ring, const std::vector<typename R::Value>& lambdas, int i) {
  return ore_lambda_stars(ring, lambdas).at(i - 1);
}

// <a, b>_Poon(n) as an F_q constant, or nullopt when the value is not
// recognisably constant below `threshold` (series index).
std::optional<Elem> poonen_pair(const Series& a, const Series& b, const Poly& n, const SeriesRing& ring,
                                long long threshold);
std::optional<Elem> poonen_pair(const Series& a, const Series& b, const Poly& n, const InfRing& ring,
                                long long threshold);

// Psi_N(z) = prod_{a in A+,N} (1 + z/a) - 1, by brute force.
RatFunc psi_n_eval(int N, const RatFunc& z);

// sgn at infinity: coeff * eta^{eta_exp} where eta = sgn(theta~) satisfies
// eta^{q-1} = -1; eta_exp is kept in [0, q-1).
struct InfSign {
  FieldPtr F;
  int q = 0;
  Elem coeff = 0;
  int eta_exp = 0;

  InfSign operator*(const InfSign& o) const;
  InfSign pow(long long k) const;
  bool operator==(const InfSign& o) const { return coeff == o.coeff && eta_exp == o.eta_exp; }
  static InfSign make(const FieldPtr& F, int q, Elem c, long long eta_exp);
};

struct SignOrd {
  Elem lead = 0;       // leading coefficient in the theta~-grading
  InfSign sign;
  Rational ord;        // normalised so that ord(theta) = -1
  long long index = 0; // X-index of the leading term
};
SignOrd sign_and_ord(const Series& x, int q);

}  // namespace ffg
