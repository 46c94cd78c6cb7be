#include <gtest/gtest.h>

#include "ffgauss/affine_ring.hpp"

using namespace ffg;

namespace {

FieldPtr F3() { return Field::get(3, 1); }
FieldPtr F2() { return Field::get(2, 1); }

long long ipow(long long b, int e) {
  long long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

TEST(Poly, ParseDigitsAndExpressions) {
  Poly a = Poly::parse(F3(), "21");  // theta + 2 = theta - 1
  EXPECT_EQ(a.deg(), 1);
  EXPECT_EQ(a[0], 2u);
  EXPECT_EQ(a, Poly::parse(F3(), "t-1"));
  EXPECT_EQ(a, Poly::parse(F3(), "theta + 2"));
  EXPECT_EQ(Poly::parse(F3(), "t^2+2t+1"), Poly::parse(F3(), "121"));
  EXPECT_EQ(Poly::parse(F3(), "1201").str(), "1201");
  EXPECT_THROW(Poly::parse(F3(), "1x"), std::invalid_argument);
  EXPECT_THROW(Poly::parse(F3(), ""), std::invalid_argument);
}

TEST(Poly, DivisionIdentity) {
  for (std::uint64_t i = 1; i < 200; i += 7)
    for (std::uint64_t j = 1; j < 40; j += 3) {
      Poly a = Poly::from_index(F3(), i), b = Poly::from_index(F3(), j);
      auto [q, r] = a.divmod(b);
      EXPECT_EQ(q * b + r, a);
      EXPECT_LT(r.deg(), b.deg());
    }
}

TEST(Poly, GcdAndInverse) {
  Poly n = Poly::parse(F3(), "t^3+2t+1");
  for (std::uint64_t i = 1; i < 27; ++i) {
    Poly a = Poly::from_index(F3(), i);
    auto [g, s, t] = xgcd(a, n);
    EXPECT_EQ(s * a + t * n, g);
    EXPECT_TRUE(g.is_monic());
    if (g.is_one()) EXPECT_TRUE((invmod(a, n) * a % n).is_one());
  }
  EXPECT_THROW(invmod(Poly::parse(F3(), "11"), Poly::parse(F3(), "121")), std::domain_error);
}

TEST(Poly, FrobeniusSubstitutesThetaPower) {
  Poly a = Poly::parse(F3(), "121");
  EXPECT_EQ(a.frob(1), a.pow(3));
  EXPECT_EQ(a.frob(2), a.pow(9));
}

int int_mobius(int m) {
  int mu = 1;
  for (int p = 2; p <= m; ++p)
    if (m % p == 0) {
      m /= p;
      if (m % p == 0) return 0;
      mu = -mu;
    }
  return mu;
}

// Number of monic irreducibles of degree k: (1/k) sum_{e | k} mu(e) q^{k/e}.
TEST(Factor, IrreducibleCountsMatchNecklaceFormula) {
  for (int q : {2, 3}) {
    FieldPtr F = Field::get(q, 1);
    for (int k = 1; k <= 4; ++k) {
      long long count = 0;
      for (const Poly& a : enumerate_monic(F, k)) count += is_irreducible(a) ? 1 : 0;
      long long s = 0;
      for (int e = 1; e <= k; ++e)
        if (k % e == 0) s += int_mobius(e) * ipow(q, k / e);
      EXPECT_EQ(count, s / k) << "q=" << q << " k=" << k;
    }
  }
}

TEST(Factor, ProductRecoversInput) {
  for (std::uint64_t i = 3; i < 243; i += 5) {
    Poly a = Poly::from_index(F3(), i);
    if (a.is_zero() || !a.is_monic()) continue;
    Poly acc = Poly::constant(F3(), 1);
    for (auto [p, e] : factor(a)) {
      EXPECT_TRUE(is_irreducible(p));
      acc = acc * p.pow(e);
    }
    EXPECT_EQ(acc, a);
  }
}

TEST(Enumerate, CountsAndOrder) {
  EXPECT_EQ(enumerate_monic(F3(), 2).size(), 9u);
  EXPECT_EQ(enumerate_below(F3(), 2).size(), 9u);
  EXPECT_EQ(enumerate_below(F2(), 3).size(), 8u);
  auto ms = enumerate_monic(F2(), 2);
  for (size_t i = 1; i < ms.size(); ++i) EXPECT_LT(ms[i - 1], ms[i]);
}

TEST(Residue, CoefficientOfTopDegree) {
  Poly n = Poly::parse(F3(), "121");
  EXPECT_EQ(residue_map(Poly::parse(F3(), "01"), n), 1u);
  EXPECT_EQ(residue_map(Poly::parse(F3(), "1"), n), 0u);
  // theta^2 = -2 theta - 1 mod n, coefficient of theta is -2 = 1.
  EXPECT_EQ(residue_map(Poly::parse(F3(), "001"), n), 1u);
}

TEST(DualFamilies, ResiduePairingIsTheIdentity) {
  for (const char* ns : {"21", "121", "011", "1101"}) {
    FieldPtr F = ns == std::string("1101") ? F2() : F3();
    Poly n = Poly::parse(F, ns);
    DualFamilies fam = dual_families(n);
    const size_t N = static_cast<size_t>(n.deg());
    ASSERT_EQ(fam.a.size(), N);
    ASSERT_EQ(fam.b.size(), N);
    for (size_t i = 0; i < N; ++i)
      for (size_t j = 0; j < N; ++j) EXPECT_EQ(residue_map(fam.a[i] * fam.b[j], n), i == j ? 1u : 0u);
  }
}

TEST(AFrac, FractionalPartDropsPolynomialPart) {
  RatFunc x = RatFunc::parse(F3(), "0021/21");
  AFrac f = a_fractional(x);
  EXPECT_LT(f.a0.deg(), f.n.deg());
  EXPECT_TRUE((x - f.value()).is_poly());
  EXPECT_TRUE(a_fractional(RatFunc(Poly::parse(F3(), "12"))).is_zero());
}

TEST(QDigits, NumeratorAndShift) {
  QDigits y = q_digits(3, 5, 2);  // 5 = 2 + 1*3
  EXPECT_EQ(y.digits, (std::vector<int>{2, 1}));
  EXPECT_EQ(y.numerator(), 5);
  EXPECT_EQ(y.denominator(), 8);
  EXPECT_EQ(digit_shift(y, 1).digits, (std::vector<int>{1, 2}));
  EXPECT_EQ(q_digits(3, -1, 2).numerator(), 7);
}

TEST(DigitStream, PadicExpansions) {
  DigitStream m1(3, -1, 1);
  for (int i = 0; i < 10; ++i) EXPECT_EQ(m1[i], 2);
  // 1/2 = 2 + 3 (1 + 3 + 9 + ...) = 2 - 3/2 in Z_3.
  DigitStream h(3, 1, 2);
  EXPECT_EQ(h[0], 2);
  for (int i = 1; i < 10; ++i) EXPECT_EQ(h[i], 1);
  DigitStream five(2, 5, 1);
  EXPECT_EQ(five[0], 1);
  EXPECT_EQ(five[1], 0);
  EXPECT_EQ(five[2], 1);
  EXPECT_EQ(five[3], 0);
  EXPECT_EQ(five.shifted(2)[4], 1);
  EXPECT_THROW(DigitStream(3, 1, 3), std::invalid_argument);
}

TEST(DigitStream, PeriodicDigitsRecoverTheRational) {
  // -r/(q^t-1) has period t with digits of r.
  for (int r = 1; r < 26; ++r) {
    DigitStream s(3, -r, 26);
    QDigits y = q_digits(3, r, 3);
    for (int i = 0; i < 9; ++i) EXPECT_EQ(s[i], y.digits[i % 3]);
  }
}

TEST(SgnFlat, UnitsAndMultiplesOfV) {
  Poly v = Poly::parse(F3(), "01");
  auto [s0, f0] = sgn_flat(RatFunc(Poly(F3())), v);
  EXPECT_EQ(s0, 0u);
  EXPECT_TRUE(f0.is_poly() && f0.num().is_one());
  auto [s1, f1] = sgn_flat(RatFunc::parse(F3(), "12"), v);
  EXPECT_EQ(s1, 2u);
  EXPECT_EQ(f1, RatFunc::parse(F3(), "12"));
  auto [s2, f2] = sgn_flat(RatFunc::parse(F3(), "02"), v);
  EXPECT_EQ(s2, 2u);
  EXPECT_TRUE(f2.num().is_one());
  EXPECT_THROW(sgn_flat(RatFunc::parse(F3(), "1/01"), v), std::domain_error);
}

TEST(Fmat, InverseTimesMatrixIsIdentity) {
  const Field& F = *Field::get(3, 2);
  fmat::M a{{1, 2, 0}, {0, 4, 5}, {7, 0, 1}};
  fmat::M b = fmat::inverse(F, a);
  ASSERT_FALSE(b.empty());
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Elem acc = 0;
      for (int k = 0; k < 3; ++k) acc = F.add(acc, F.mul(a[i][k], b[k][j]));
      EXPECT_EQ(acc, i == j ? 1u : 0u);
    }
  EXPECT_TRUE(fmat::inverse(F, {{1, 1}, {1, 1}}).empty());
}

}  // namespace
