#include <gtest/gtest.h>

#include "ffgauss/vgamma.hpp"

using namespace ffg;

namespace {

FieldPtr F3() { return Field::get(3, 1); }

TEST(PRat, NormalisesSignAndCommonFactors) {
  EXPECT_EQ(PRat(2, -4), PRat(-1, 2));
  EXPECT_EQ(PRat(1, 2) + PRat(1, 4), PRat(3, 4));
  EXPECT_EQ(PRat(1, 2) - PRat(1, 2), PRat::integer(0));
  EXPECT_EQ(PRat::parse("-3/8"), PRat(-3, 8));
  EXPECT_EQ(PRat::parse("5"), PRat::integer(5));
  EXPECT_THROW(PRat::parse("x/2"), std::invalid_argument);
  EXPECT_THROW(PRat(1, 0), std::invalid_argument);
}

TEST(Digits, ValueOfFiniteExpansion) {
  EXPECT_EQ(digits_value(DigitStream(3, 7, 1), 4), 7);
  // -1 = sum 2 * 3^i
  EXPECT_EQ(digits_value(DigitStream(3, -1, 1), 3), 26);
  DigitStream h(3, 1, 2);
  EXPECT_EQ((2 * digits_value(h, 6)) % 729, 1);
}

struct Case {
  int q;
  const char* v;
  const char* x;
};

class Levels : public ::testing::TestWithParam<Case> {};

TEST_P(Levels, FastMatchesBruteForce) {
  auto [q, vs, xs] = GetParam();
  FieldPtr Fq = Field::get(q, 1);
  GammaEngine E = GammaEngine::standalone(q, Poly::parse(Fq, vs), 8);
  RatFunc x = RatFunc::parse(Fq, xs);
  auto fast = E.flat_levels(x, 6);
  for (int i = 0; i <= 6; ++i) {
    Series brute = E.flat_level_brute(i, x);
    EXPECT_TRUE(fast[i].equals_to(brute, E.prec())) << "i=" << i;
    EXPECT_TRUE(E.flat_level(i, x).equals_to(brute, E.prec())) << "i=" << i;
  }
}

INSTANTIATE_TEST_SUITE_P(Grid, Levels,
                         ::testing::Values(Case{3, "01", "1/21"}, Case{3, "01", "2/121"}, Case{2, "01", "1/111"},
                                           Case{2, "111", "1/11"}, Case{3, "01", "0"}),
                         [](const auto& info) {
                           std::string x = info.param.x;
                           for (char& c : x)
                             if (c == '/') c = '_';
                           return "q" + std::to_string(info.param.q) + "_v" + info.param.v + "_x" + x;
                         });

TEST(OneUnitPow, IntegerExponentMatchesPow) {
  GammaEngine E = GammaEngine::standalone(3, Poly::parse(F3(), "11"), 10);
  const SeriesRing& W = E.ring();
  Series u = W.one() + Series::monomial(W.F, 1, 2, W.cap) + Series::monomial(W.F, 2, 1, W.cap);
  for (long long k : {0, 1, 2, 5, 17, 40}) EXPECT_TRUE(E.one_unit_pow(u, DigitStream(3, k, 1)).equals_to(u.pow(k), 10));
  // u^{1/2} squared is u
  Series h = E.one_unit_pow(u, DigitStream(3, 1, 2));
  EXPECT_TRUE((h * h).equals_to(u, 10));
  EXPECT_THROW(E.one_unit_pow(W.constant(2), DigitStream(3, 1, 1)), std::domain_error);
}

TEST(Pi, ArithmeticAtZeroIsOne) {
  GammaEngine E = GammaEngine::standalone(3, Poly::parse(F3(), "01"), 8);
  EXPECT_TRUE(E.pi_ari(DigitStream(3, 0, 1)).equals_to(E.ring().one(), 8));
}

TEST(Gamma, DeterministicAcrossEngines) {
  FieldPtr Fq = F3();
  GammaEngine a = GammaEngine::standalone(3, Poly::parse(Fq, "11"), 8);
  GammaEngine b = GammaEngine::standalone(3, Poly::parse(Fq, "11"), 8);
  RatFunc x = RatFunc::parse(Fq, "1/21");
  for (GammaKind k : {GammaKind::Arithmetic, GammaKind::Geometric, GammaKind::TwoVariable})
    EXPECT_EQ(a.gamma(k, x, PRat(1, 2)).digest(), b.gamma(k, x, PRat(1, 2)).digest());
}

TEST(Engine, RejectsReducibleV) {
  EXPECT_THROW(GammaEngine::standalone(3, Poly::parse(F3(), "121"), 8), std::invalid_argument);
  EXPECT_THROW(GammaEngine::standalone(3, Poly::parse(F3(), "01"), 0), std::invalid_argument);
}

}  // namespace
