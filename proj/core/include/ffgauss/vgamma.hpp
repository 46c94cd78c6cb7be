#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "ffgauss/affine_ring.hpp"
#include "ffgauss/local_v.hpp"
#include "ffgauss/series.hpp"

namespace ffg {

// p-adic rational r/D with p not dividing D.
struct PRat {
  long long r = 0, D = 1;

  PRat() = default;
  PRat(long long r_, long long D_);
  static PRat integer(long long k) { return PRat(k, 1); }
  PRat operator+(const PRat& o) const;
  PRat operator-(const PRat& o) const;
  PRat operator-() const { return PRat(-r, D); }
  PRat operator*(long long k) const { return PRat(r * k, D); }
  PRat div(long long k) const { return PRat(r, D * k); }
  bool operator==(const PRat& o) const { return r == o.r && D == o.D; }
  DigitStream digits(int q) const { return DigitStream(q, r, D); }
  std::string str() const;
  static PRat parse(const std::string& s);
};

enum class GammaKind { Arithmetic, Geometric, TwoVariable };

// Evaluates the v-adic Pi and Gamma functions in W = F[[v]] with theta
// sent to the Hensel root T of v congruent to t0.  Results carry absolute
// precision `prec`; level products run up to i_max = d (prec + 1).
class GammaEngine {
 public:
  GammaEngine(int q, const Poly& v, const FieldPtr& F, Elem t0, long long prec);
  // Same coefficient field and theta-image as the context's W.
  static GammaEngine for_context(const CyclotomicContext& ctx, long long prec);
  // W over A/v with t0 the smallest root of v.
  static GammaEngine standalone(int q, const Poly& v, long long prec);

  int q() const { return q_; }
  const Poly& v() const { return v_; }
  int d() const { return d_; }
  long long prec() const { return prec_; }
  long long i_max() const { return i_max_; }
  const SeriesRing& ring() const { return W_; }

  // prod_{a in A+,i} (x + a)^flat, levels 0..upto.
  std::vector<Series> flat_levels(const RatFunc& x, long long upto) const;
  Series flat_level(int i, const RatFunc& x) const;
  Series flat_level_brute(int i, const RatFunc& x) const;
  // x^flat embedded in W.
  Series flat(const RatFunc& x) const;

  Series pi_ari(const DigitStream& y) const;
  Series pi_geo(const RatFunc& x, const DigitStream& y) const;
  // Pi^geo(x) with every digit 1.
  Series pi_geo(const RatFunc& x) const;
  Series pi_two(const RatFunc& x, const DigitStream& y) const;
  // Truncation after level `upto` (inclusive) for precision certificates.
  Series pi_ari_upto(const DigitStream& y, long long upto) const;
  Series pi_geo_upto(const RatFunc& x, const DigitStream& y, long long upto) const;

  Series gamma_ari(const PRat& y) const;
  Series gamma_geo(const RatFunc& x, const PRat& y) const;
  Series gamma_geo(const RatFunc& x) const;
  Series gamma_two(const RatFunc& x, const PRat& y) const;
  Series gamma(GammaKind kind, const RatFunc& x, const PRat& y) const;

  // u^y for a one-unit u and a p-adic exponent given by digits.
  Series one_unit_pow(const Series& u, const DigitStream& y) const;

 private:
  std::vector<Series> levels(const RatFunc& x, long long upto) const;
  std::vector<Series> compute_levels(const RatFunc& x, long long upto) const;
  std::vector<Series> compute_levels_fast(const RatFunc& x, long long upto, long long margin) const;
  Series to_out(const Series& s) const;

  int q_;
  Poly v_;
  int d_;
  FieldPtr F_;
  Elem t0_;
  long long prec_;
  long long i_max_;
  SeriesRing W_;
  struct Cache {
    std::mutex mu;
    std::map<std::string, std::vector<Series>> levels;
  };
  std::shared_ptr<Cache> cache_;
};

// sum_i digit_i q^i over the first `count` digits.
long long digits_value(const DigitStream& y, int count);

}  // namespace ffg
