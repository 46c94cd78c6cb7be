#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "ffgauss/ffq_tower.hpp"

namespace ffg {

// Element of A = F_q[theta]. Coefficients low-to-high, no trailing zeros.
class Poly {
 public:
  Poly() = default;
  explicit Poly(FieldPtr F) : F_(std::move(F)) {}
  Poly(FieldPtr F, std::vector<Elem> c);

  static Poly constant(const FieldPtr& F, Elem c);
  static Poly monomial(const FieldPtr& F, int k, Elem c = 1);
  static Poly theta(const FieldPtr& F) { return monomial(F, 1); }
  // Decodes the low-to-high digit string ("101" = theta^2 + 1) or a small
  // expression in t/theta such as "t^2+2t+1".
  static Poly parse(const FieldPtr& F, const std::string& s);

  const FieldPtr& field() const { return F_; }
  int q() const { return F_->q(); }
  const std::vector<Elem>& coeffs() const { return c_; }
  Elem operator[](int i) const { return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : 0; }
  int deg() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  Elem lead() const { return c_.empty() ? 0 : c_.back(); }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }
  Poly monic() const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly scale(Elem c) const;
  std::pair<Poly, Poly> divmod(const Poly& o) const;
  Poly operator/(const Poly& o) const { return divmod(o).first; }
  Poly operator%(const Poly& o) const { return divmod(o).second; }
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  bool operator==(const Poly& o) const { return c_ == o.c_; }
  bool operator!=(const Poly& o) const { return c_ != o.c_; }
  // Degree first, then coefficients from the top.
  bool operator<(const Poly& o) const;

  Poly pow(unsigned long long k) const;
  // a(theta)^{q^k} = a(theta^{q^k}) since coefficients lie in F_q.
  Poly frob(int k = 1) const;
  bool divides(const Poly& o) const { return (o % *this).is_zero(); }
  // Value at x in an extension field of F_q (F_q sits as indices < q).
  Elem eval(const Field& G, Elem x) const;
  // Index sum c_i q^i, used for deterministic ordering of residues.
  std::uint64_t index() const;
  static Poly from_index(const FieldPtr& F, std::uint64_t idx);

  std::string str() const;

 private:
  void trim();
  FieldPtr F_;
  std::vector<Elem> c_;
};

Poly gcd(Poly a, Poly b);
// (g, s, t) with s a + t b = g, g monic.
std::tuple<Poly, Poly, Poly> xgcd(const Poly& a, const Poly& b);
Poly powmod(const Poly& a, unsigned long long k, const Poly& n);
// Inverse of a modulo n; throws when not a unit.
Poly invmod(const Poly& a, const Poly& n);

// Element of k = F_q(theta) in lowest terms with monic denominator.
class RatFunc {
 public:
  RatFunc() = default;
  explicit RatFunc(const Poly& a);
  RatFunc(const Poly& num, const Poly& den);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  const FieldPtr& field() const { return num_.field(); }
  bool is_zero() const { return num_.is_zero(); }
  bool is_poly() const { return den_.is_one(); }

  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator-(const RatFunc& o) const;
  RatFunc operator-() const;
  RatFunc operator*(const RatFunc& o) const;
  RatFunc operator/(const RatFunc& o) const;
  bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const RatFunc& o) const { return !(*this == o); }
  RatFunc pow(long long k) const;
  // v-adic valuation for irreducible v (numerator minus denominator).
  int vval(const Poly& v) const;
  bool v_integral(const Poly& v) const { return !v.divides(den_) || den_.deg() == 0; }
  std::string str() const;
  static RatFunc parse(const FieldPtr& F, const std::string& s);

 private:
  Poly num_, den_;
};

// x = a0/n with deg a0 < deg n, lowest terms; 0 is 0/1.
struct AFrac {
  Poly a0;
  Poly n;
  RatFunc value() const { return RatFunc(a0, n); }
  bool is_zero() const { return a0.is_zero(); }
  std::string str() const { return a0.str() + "/" + n.str(); }
  bool operator==(const AFrac& o) const { return a0 == o.a0 && n == o.n; }
  bool operator<(const AFrac& o) const {
    return n == o.n ? a0 < o.a0 : n < o.n;
  }
};

// Fractional part at infinity.
AFrac a_fractional(const RatFunc& x);

// Monic polynomials of exact degree i in index order.
std::vector<Poly> enumerate_monic(const FieldPtr& F, int i);
void for_each_monic(const FieldPtr& F, int i, const std::function<void(const Poly&)>& f);
// All polynomials of degree < i (q^i of them) in index order.
std::vector<Poly> enumerate_below(const FieldPtr& F, int i);

// Res(a/n) = coefficient of theta^{deg n - 1} in a mod n.
Elem residue_map(const Poly& a, const Poly& n);

struct DualFamilies {
  std::vector<Poly> a;
  std::vector<Poly> b;
};
DualFamilies dual_families(const Poly& n);

// Monic irreducible factorisation by trial division.
std::vector<std::pair<Poly, int>> factor(const Poly& a);
bool is_irreducible(const Poly& a);
// Monic divisors in (degree, index) order.
std::vector<Poly> monic_divisors(const Poly& n);
int mobius(const Poly& a);

// Fractional q-adic digits of <r/(q^t - 1)>.
struct QDigits {
  int q = 0;
  int t = 0;
  std::vector<int> digits;

  // Sum y_s q^s, the numerator over q^t - 1.
  long long numerator() const;
  long long denominator() const;
  bool is_zero() const;
  std::string str() const;
  bool operator==(const QDigits& o) const { return q == o.q && t == o.t && digits == o.digits; }
};

QDigits q_digits(int q, long long r, int t);
QDigits digit_shift(const QDigits& y, long long h);

// p-adic integer r/D (gcd(D, p) = 1) read in base q, digits produced lazily.
class DigitStream {
 public:
  DigitStream() = default;
  DigitStream(int q, long long r, long long D);
  static DigitStream from_qdigits(const QDigits& y);
  static DigitStream finite(int q, std::vector<int> digits);

  int operator[](long long i) const;
  int q() const { return q_; }
  long long r() const { return r0_; }
  long long D() const { return D0_; }
  bool is_finite() const { return finite_; }
  // Digits multiplied by q^h (h >= 0 shifts up; h < 0 drops low digits).
  DigitStream shifted(long long h) const;
  std::string str(int count = 8) const;

 private:
  void extend(long long upto) const;
  int q_ = 2;
  long long r0_ = 0, D0_ = 1;
  bool finite_ = false;
  long long shift_ = 0;
  mutable long long r_ = 0;
  mutable std::vector<int> digits_;
};

// (sgn x, x^flat) with x^flat = 1 when v | x.
std::pair<Elem, RatFunc> sgn_flat(const RatFunc& x, const Poly& v);

// Small dense linear algebra over a finite field.
namespace fmat {
using M = std::vector<std::vector<Elem>>;
// Inverse, or empty when singular.
M inverse(const Field& F, M a);
}  // namespace fmat

}  // namespace ffg
