#include <gtest/gtest.h>

#include "ffgauss/gauss_sums.hpp"
#include "oracles.hpp"

using namespace ffg;

namespace {

ContextPtr ctx_of(int q, const char* v, const char* n, long long prec) {
  FieldPtr F = Field::get(q, 1);
  return make_context(q, Poly::parse(F, v), Poly::parse(F, n), prec);
}

std::vector<Elem> digits_from_zero(const Series& s, long long count) {
  std::vector<Elem> out;
  for (long long k = 0; k < count; ++k) out.push_back(k < s.val() ? 0 : s.coeff(k));
  return out;
}

// q = 3, eps = 1: (1 - theta)^{1/2} = 1 + t + t^2 + 2t^3 + 2t^4 + ... over F_3, so
// G = 2t + 2t^2 + t^3 + t^4 + ...
TEST(WorkedExample, FrozenLowDigits) {
  auto ctx = ctx_of(3, "01", "21", 6);
  FieldPtr F = ctx->Fq;
  AFrac x{Poly::constant(F, 1), ctx->n};
  Series g = geo_gauss_value(*ctx, x, Poly::constant(F, 1), 0);
  EXPECT_EQ(digits_from_zero(g, 5), (std::vector<Elem>{0, 2, 2, 1, 1}));
}

TEST(WorkedExample, MatchesBinomialSeriesForQ3AndQ4) {
  for (int q : {3, 4}) {
    auto ctx = ctx_of(q, "01", q == 3 ? "21" : "11", 12);
    for (Elem eps = 1; eps < static_cast<Elem>(q); ++eps) {
      AFrac x{Poly::constant(ctx->Fq, eps), ctx->n};
      Series g = geo_gauss_value(*ctx, x, Poly::constant(ctx->Fq, 1), 0);
      ASSERT_GE(g.prec(), 12);
      EXPECT_EQ(digits_from_zero(g, 12), oracle::worked_example_coeffs(q, eps, 12)) << "q=" << q << " eps=" << eps;
    }
  }
}

TEST(Oracle, ScalarProductAgreesOnSmallContexts) {
  for (auto [q, v, n] : {std::tuple{3, "01", "21"}, std::tuple{3, "21", "121"}, std::tuple{2, "01", "111"},
                         std::tuple{2, "111", "11"}}) {
    auto ctx = ctx_of(q, v, n, 8);
    for (std::uint64_t i = 0; i < 9; ++i) {
      Poly a0 = Poly::from_index(ctx->Fq, i);
      if (a0.deg() >= ctx->n.deg()) break;
      AFrac x = a_fractional(RatFunc(a0, ctx->n));
      Series g = geo_gauss_value(*ctx, x, Poly::constant(ctx->Fq, 1), 0);
      EXPECT_TRUE(g.equals_to(scalar_product_oracle(*ctx, x), 8)) << q << " " << v << " " << n << " " << a0.str();
    }
  }
}

TEST(GaussValue, WellDefinedModuloA) {
  auto ctx = ctx_of(3, "01", "121", 8);
  AFrac x = context_frac(*ctx, RatFunc::parse(ctx->Fq, "2/121"));
  AFrac shifted = context_frac(*ctx, RatFunc::parse(ctx->Fq, "2/121") + RatFunc(Poly::parse(ctx->Fq, "102")));
  EXPECT_EQ(x, shifted);
  auto g = geo_gauss(ctx, x, Poly::constant(ctx->Fq, 1), 0);
  EXPECT_EQ(g.conj_s, 0);
  EXPECT_TRUE(g.value.equals_to(geo_gauss_value(*ctx, shifted, Poly::constant(ctx->Fq, 1), 0), 8));
}

TEST(GaussValue, SigmaActsByMultiplyingX) {
  auto ctx = ctx_of(3, "01", "121", 8);
  AFrac x = context_frac(*ctx, RatFunc::parse(ctx->Fq, "1/121"));
  for (const Poly& a : units_mod(ctx->n)) {
    Series lhs = geo_gauss_value(*ctx, x, a, 0);
    AFrac ax = context_frac(*ctx, RatFunc(a) * x.value());
    EXPECT_TRUE(lhs.equals_to(geo_gauss_value(*ctx, ax, Poly::constant(ctx->Fq, 1), 0), 8)) << a.str();
  }
}

TEST(GaussValue, TrivialCharacterGivesOne) {
  auto ctx = ctx_of(2, "01", "11", 8);
  Series g = geo_gauss_value(*ctx, AFrac{Poly(ctx->Fq), Poly::constant(ctx->Fq, 1)}, Poly::constant(ctx->Fq, 1), 0);
  EXPECT_TRUE(g.equals_to(ctx->W.one(), 8));
}

TEST(Reflection, ConjugateProductIsVToTheL) {
  for (auto [q, v, n] : {std::tuple{3, "01", "21"}, std::tuple{2, "01", "11"}, std::tuple{2, "11", "111"}}) {
    auto ctx = ctx_of(q, v, n, 10);
    AFrac x = context_frac(*ctx, RatFunc(Poly::constant(ctx->Fq, 1), ctx->n));
    Series acc = ctx->W.one();
    for (Elem e = 1; e < static_cast<Elem>(q); ++e)
      for (int s = 0; s < ctx->dl; ++s) acc = acc * geo_gauss_value(*ctx, x, Poly::constant(ctx->Fq, e), s);
    Series vl = ctx->W.embed(ctx->v.pow(ctx->l));
    EXPECT_TRUE(acc.equals_to(vl, 10)) << q << " " << v << " " << n;
  }
}

TEST(Units, CountIsEulerPhi) {
  FieldPtr F = Field::get(3, 1);
  EXPECT_EQ(units_mod(Poly::parse(F, "121")).size(), 6u);  // (t+1)^2: 9 - 3
  EXPECT_EQ(units_mod(Poly::parse(F, "101")).size(), 8u);
}

TEST(GroupRing, ArithmeticOnSymbols) {
  FieldPtr F = Field::get(3, 1);
  Poly n = Poly::parse(F, "21");
  GroupRingElem a(n, 1), b(n, 1);
  a.add(Poly::constant(F, 1), 0, 2);
  b.add(Poly::constant(F, 2), 0, 1);
  EXPECT_EQ((a + b).total(), 3);
  GroupRingElem p = a * b;
  EXPECT_EQ(p.coeff(Poly::constant(F, 2), 0), 2);
  EXPECT_EQ(p.total(), 2);
}

}  // namespace
