#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ffgauss/ffq_tower.hpp"

namespace ffg {

// Precision ceiling shared by all values of one computation: `abs` bounds the
// absolute precision, `rel` the number of stored digits past the valuation.
struct Cap {
  long long abs = kUnbounded;
  long long rel = kUnbounded;
  static constexpr long long kUnbounded = 1LL << 61;

  static Cap absolute(long long n) { return {n, kUnbounded}; }
  static Cap relative(long long n) { return {kUnbounded, n}; }
  Cap meet(const Cap& o) const { return {abs < o.abs ? abs : o.abs, rel < o.rel ? rel : o.rel}; }
};

// Truncated Laurent series sum c_i X^{val+i} + O(X^prec) over a finite field.
// X is v (ram = 1), the ramified uniformizer u with u^ram = -v (ram > 1), or
// theta~^{-1} at infinity (ram = 0).
class Series {
 public:
  Series() = default;
  Series(FieldPtr F, Cap cap, int ram = 1);

  static Series zero(const FieldPtr& F, Cap cap, int ram = 1);
  static Series constant(const FieldPtr& F, Elem c, Cap cap, int ram = 1);
  static Series monomial(const FieldPtr& F, Elem c, long long k, Cap cap, int ram = 1);
  static Series from_coeffs(const FieldPtr& F, long long val, std::vector<Elem> c,
                            long long prec, Cap cap, int ram = 1);

  const FieldPtr& field() const { return F_; }
  const Cap& cap() const { return cap_; }
  int ram() const { return ram_; }
  long long val() const { return val_; }
  long long prec() const { return prec_; }
  bool is_zero() const { return c_.empty(); }
  bool is_exact_zero() const { return c_.empty() && prec_ >= Cap::kUnbounded; }
  // Coefficient of X^i; throws when i >= prec.
  Elem coeff(long long i) const;
  Elem lead() const { return c_.empty() ? 0 : c_.front(); }
  const std::vector<Elem>& digits() const { return c_; }
  long long valuation() const;

  Series operator+(const Series& o) const;
  Series operator-(const Series& o) const;
  Series operator-() const;
  Series operator*(const Series& o) const;
  Series operator/(const Series& o) const { return *this * o.inv(); }
  Series& operator+=(const Series& o) { return *this = *this + o; }
  Series& operator-=(const Series& o) { return *this = *this - o; }
  Series& operator*=(const Series& o) { return *this = *this * o; }
  Series scale(Elem c) const;
  Series inv() const;
  Series pow(long long k) const;
  // x^{q^k}: Frobenius on coefficients, exponents multiplied by q^k.
  Series frob(int k = 1) const;
  // Applies Frobenius^k to the coefficients only (a tau-conjugate).
  Series frob_coeffs(long long k) const;
  Series shift(long long k) const;
  Series truncate(long long prec) const;
  Series with_cap(Cap cap) const;
  // Map coefficients through an embedding into a bigger field.
  Series map_field(const Embedding& emb) const;

  // Agreement below min(prec, prec'): returns the first differing index,
  // or the shared precision when all known digits agree.
  long long agree_upto(const Series& o) const;
  bool equals_to(const Series& o, long long n) const;
  bool is_constant_upto(long long n) const;

  std::string digest() const;

 private:
  void normalize();
  FieldPtr F_;
  Cap cap_;
  int ram_ = 1;
  long long val_ = Cap::kUnbounded;
  long long prec_ = Cap::kUnbounded;
  std::vector<Elem> c_;
};

}  // namespace ffg
