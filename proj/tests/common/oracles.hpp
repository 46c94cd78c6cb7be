#pragma once

#include <vector>

#include "ffgauss/affine_ring.hpp"
#include "ffgauss/ffq_tower.hpp"

namespace ffg::oracle {

// binom(y, k) mod p for a p-adic integer y, by Lucas' theorem on base-p digits.
inline int lucas_binom(const DigitStream& y, long long k, int p) {
  long long acc = 1;
  for (long long i = 0; k > 0; ++i, k /= p) {
    const int ki = static_cast<int>(k % p), yi = y[i];
    if (ki > yi) return 0;
    long long c = 1;
    for (int j = 0; j < ki; ++j) c = c * (yi - j) / (j + 1);
    acc = acc * (c % p) % p;
  }
  return static_cast<int>(acc);
}

// First `count` coefficients of (1 - theta)^{1/(q-1)} in F_p, read as F_q indices.
inline std::vector<Elem> root_of_one_minus_theta(int q, int count) {
  auto [p, e] = prime_power(q);
  (void)e;
  DigitStream y(p, 1, q - 1);
  std::vector<Elem> out;
  for (long long k = 0; k < count; ++k) {
    int c = lucas_binom(y, k, p);
    if (k % 2 == 1) c = (p - c) % p;
    out.push_back(static_cast<Elem>(c));
  }
  return out;
}

// Coefficients of 1 - eps (1 - theta)^{1/(q-1)} from index 0.
inline std::vector<Elem> worked_example_coeffs(int q, Elem eps, int count) {
  FieldPtr F = Field::get(q, 1);
  auto w = root_of_one_minus_theta(q, count);
  std::vector<Elem> out;
  for (int k = 0; k < count; ++k) {
    Elem t = F->neg(F->mul(eps, w[k]));
    out.push_back(k == 0 ? F->add(1, t) : t);
  }
  return out;
}

}  // namespace ffg::oracle
