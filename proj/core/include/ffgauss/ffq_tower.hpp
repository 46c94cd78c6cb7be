#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ffg {

// Element of F_{q^m}, stored as its index sum c_i q^i where c_i is the index
// of the i-th coefficient in F_q (itself base-p digits over F_p).
using Elem = std::uint32_t;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

class Field {
 public:
  // Deterministic F_{q^m}; repeated calls return the same object.
  static FieldPtr get(int q, int m);

  int p() const { return p_; }
  int e() const { return e_; }
  int q() const { return q_; }
  int m() const { return m_; }
  Elem size() const { return size_; }
  Elem order() const { return size_ - 1; }

  // Monic modulus over F_q, low-to-high, length m + 1.
  const std::vector<Elem>& modulus() const { return modulus_; }
  // F_q viewed as a field (the same object when m == 1).
  FieldPtr base() const;

  Elem add(Elem a, Elem b) const {
    if (p_ == 2) return a ^ b;
    if (a == 0) return b;
    if (b == 0) return a;
    std::uint32_t la = log_[a], lb = log_[b];
    std::uint32_t d = lb >= la ? lb - la : lb + order() - la;
    std::int64_t z = zech_[d];
    if (z < 0) return 0;
    return exp_[la + static_cast<std::uint32_t>(z)];
  }
  Elem neg(Elem a) const {
    if (p_ == 2 || a == 0) return a;
    return exp_[log_[a] + order() / 2];
  }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }
  Elem inv(Elem a) const {
    if (a == 0) throw std::domain_error("inverse of zero in finite field");
    return exp_[(order() - log_[a]) % order()];
  }
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, long long k) const;
  // x^{q^s}, s taken modulo m (negative s allowed).
  Elem frob(Elem a, long long s) const;
  Elem from_int(long long k) const;
  std::uint32_t log(Elem a) const { return log_[a]; }
  Elem exp(long long k) const;
  Elem primitive() const { return exp_[1]; }

  std::vector<Elem> coeffs(Elem a) const;
  Elem from_coeffs(const std::vector<Elem>& c) const;

  // True when x lies in F_{q^{d}} (d | m).
  bool in_subfield(Elem x, int d) const { return frob(x, d) == x; }

  std::string name() const;

 private:
  Field() = default;
  static FieldPtr build(int q, int m);

  int p_ = 0, e_ = 0, q_ = 0, m_ = 0;
  Elem size_ = 0;
  std::vector<Elem> modulus_;
  std::vector<Elem> exp_;           // length 2 * order
  std::vector<std::uint32_t> log_;  // log_[0] unused
  std::vector<std::int64_t> zech_;  // log(1 + g^k), -1 when 1 + g^k = 0
  std::vector<std::uint32_t> qpow_mod_;  // q^s mod order, s < m
};

// Value-type wrapper used at API boundaries.
struct FFElem {
  FieldPtr F;
  Elem v = 0;

  FFElem() = default;
  FFElem(FieldPtr f, Elem x) : F(std::move(f)), v(x) {}
  FFElem operator+(const FFElem& o) const { return {F, F->add(v, o.v)}; }
  FFElem operator-(const FFElem& o) const { return {F, F->sub(v, o.v)}; }
  FFElem operator-() const { return {F, F->neg(v)}; }
  FFElem operator*(const FFElem& o) const { return {F, F->mul(v, o.v)}; }
  FFElem operator/(const FFElem& o) const { return {F, F->div(v, o.v)}; }
  bool operator==(const FFElem& o) const { return v == o.v && F == o.F; }
  bool operator!=(const FFElem& o) const { return !(*this == o); }
  bool operator<(const FFElem& o) const { return v < o.v; }
};

FFElem frobenius(const FFElem& x, long long s);

// Embedding F_{q^a} -> F_{q^b} (a | b) sending the generator of the small
// field to the smallest root of its modulus in the big field.
class Embedding {
 public:
  Embedding(FieldPtr small, FieldPtr big, Elem gen_image);
  static std::shared_ptr<const Embedding> standard(const FieldPtr& small,
                                                   const FieldPtr& big);

  Elem operator()(Elem x) const { return map_[x]; }
  // Inverse on the image; throws when x is outside the subfield.
  Elem back(Elem x) const;
  bool contains(Elem x) const { return inv_.count(x) != 0; }
  const FieldPtr& small() const { return small_; }
  const FieldPtr& big() const { return big_; }
  Elem gen_image() const { return gen_image_; }

 private:
  FieldPtr small_, big_;
  Elem gen_image_;
  std::vector<Elem> map_;
  std::map<Elem, Elem> inv_;
};
using EmbeddingPtr = std::shared_ptr<const Embedding>;

// Relative trace and norm from x's field down to `down`.
std::pair<FFElem, FFElem> trace_norm(const FFElem& x, const FieldPtr& down);

// Polynomials with coefficients in one field, low-to-high.
namespace fpoly {
using P = std::vector<Elem>;
void trim(P& a);
int deg(const P& a);
P add(const Field& F, const P& a, const P& b);
P sub(const Field& F, const P& a, const P& b);
P mul(const Field& F, const P& a, const P& b);
P scale(const Field& F, const P& a, Elem c);
// Quotient and remainder; b must be nonzero.
std::pair<P, P> divmod(const Field& F, const P& a, const P& b);
P mod(const Field& F, const P& a, const P& b);
P gcd(const Field& F, P a, P b);
P powmod(const Field& F, const P& a, unsigned long long k, const P& f);
Elem eval(const Field& F, const P& a, Elem x);
bool is_irreducible(const Field& F, const P& f);
}  // namespace fpoly

// Roots in `target` of f (coefficients in `src`, a subfield of target),
// sorted by index.
std::vector<Elem> roots_over(const FieldPtr& src, const fpoly::P& f,
                             const FieldPtr& target);

bool is_prime(long long n);
// q = p^e, or throws.
std::pair<int, int> prime_power(long long q);

}  // namespace ffg
