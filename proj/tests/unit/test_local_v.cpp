#include <gtest/gtest.h>

#include "ffgauss/carlitz_core.hpp"
#include "ffgauss/local_v.hpp"

using namespace ffg;

namespace {

FieldPtr F3() { return Field::get(3, 1); }

bool is_zero_to(const Series& s, long long n) { return s.is_zero() ? s.prec() >= n : s.val() >= n; }

TEST(Series, InverseAndDistributivity) {
  FieldPtr F = Field::get(3, 2);
  Cap cap = Cap::absolute(10);
  Series a = Series::from_coeffs(F, 0, {1, 4, 0, 7, 2}, 10, cap);
  Series b = Series::from_coeffs(F, 1, {5, 3, 8}, 10, cap);
  Series c = Series::from_coeffs(F, 0, {2, 0, 1}, 10, cap);
  EXPECT_TRUE((a * a.inv()).equals_to(Series::constant(F, 1, cap), 10));
  EXPECT_TRUE((a * (b + c)).equals_to(a * b + a * c, 10));
  EXPECT_TRUE(a.pow(5).equals_to(a * a * a * a * a, 10));
  EXPECT_TRUE(a.pow(-2).equals_to((a * a).inv(), 10));
}

TEST(Series, FrobeniusIsMultiplicative) {
  FieldPtr F = Field::get(3, 2);
  Cap cap = Cap::absolute(30);
  Series a = Series::from_coeffs(F, 0, {1, 4, 0, 7, 2}, 30, cap);
  Series b = Series::from_coeffs(F, 0, {5, 3, 8}, 30, cap);
  EXPECT_TRUE((a * b).frob(1).equals_to(a.frob(1) * b.frob(1), 30));
  EXPECT_TRUE(a.frob(1).equals_to(a.pow(3), 30));
  EXPECT_EQ(a.shift(3).val(), 3);
}

TEST(Series, PrecisionTracksTheLowestKnownDigit) {
  FieldPtr F = F3();
  Series a = Series::from_coeffs(F, 0, {1, 1}, 5, Cap());
  Series b = Series::from_coeffs(F, 0, {1}, 3, Cap());
  EXPECT_EQ((a + b).prec(), 3);
  EXPECT_EQ((a * b.shift(2)).prec(), 5);
  EXPECT_EQ(a.agree_upto(b), 1);
}

TEST(Series, DigestIsCanonical) {
  Series a = Series::from_coeffs(F3(), 1, {2, 0, 1}, 4, Cap());
  EXPECT_EQ(a.digest(), "GF(3^1);ram=1;prec=4;val=1;c=2,0,1");
}

TEST(Ramified, RewritingMultipliesTheValuation) {
  Series v = Series::from_coeffs(F3(), 1, {1, 2}, 6, Cap::absolute(6));
  Series u = to_ramified(v, 2);
  EXPECT_EQ(u.ram(), 2);
  EXPECT_EQ(u.val(), 2);
  // v = -u^2
  EXPECT_EQ(u.coeff(2), F3()->neg(1));
}

TEST(Unramified, ThetaIsARootOfV) {
  FieldPtr Fq = F3();
  Poly v = Poly::parse(Fq, "211");  // t^2 + t + 2, irreducible over F_3
  ASSERT_TRUE(is_irreducible(v));
  FieldPtr F = Field::get(3, 2);
  Elem t0 = roots_over(Fq, v.coeffs(), F).front();
  SeriesRing W = make_unramified(v, F, t0, 12);
  Series vv = W.embed(v);
  EXPECT_TRUE(vv.equals_to(Series::monomial(F, 1, 1, W.cap), 12));
  EXPECT_EQ(reduce(W.theta()), t0);
}

TEST(Hensel, SquareRootOfOneMinusV) {
  FieldPtr F = F3();
  SeriesRing W = make_unramified(Poly::theta(F), F, 0, 12);
  Series target = W.one() - Series::monomial(F, 1, 1, W.cap);
  Series r = W.hensel({-target, W.zero(), W.one()}, W.one());
  EXPECT_TRUE((r * r).equals_to(target, 12));
  EXPECT_EQ(reduce(r), 1u);
}

struct Ctx {
  int q;
  const char* v;
  const char* n;
};

class ContextTest : public ::testing::TestWithParam<Ctx> {};

TEST_P(ContextTest, InvariantsHold) {
  auto [q, vs, ns] = GetParam();
  FieldPtr Fq = Field::get(q, 1);
  Poly v = Poly::parse(Fq, vs), n = Poly::parse(Fq, ns);
  const long long prec = 8;
  ContextPtr ctx = make_context(q, v, n, prec);
  EXPECT_EQ(ctx->d, v.deg());
  EXPECT_EQ(ctx->l, order_mod(v, n));
  EXPECT_EQ(ctx->dl, ctx->d * ctx->l);
  EXPECT_EQ(ctx->m, v.pow(ctx->l) - Poly::constant(Fq, 1));
  EXPECT_TRUE(n.divides(ctx->m));
  EXPECT_EQ(ctx->F->m(), ctx->dl);
  // lambda is a primitive n-torsion point lifting lambda_bar.
  EXPECT_TRUE(is_zero_to(carlitz_eval(n, ctx->lambda, ctx->W), prec));
  EXPECT_EQ(reduce(ctx->lambda), ctx->lambda_bar);
  for (auto [p, e] : factor(n)) EXPECT_NE(reduce(carlitz_eval(n / p, ctx->lambda, ctx->W)), 0u);
  // omega(z) is the m-torsion lift of z, and the lift is F_q-linear.
  for (Elem z = 1; z < std::min<Elem>(ctx->F->size(), 30); ++z) {
    const Series& w = geometric_omega(*ctx, z);
    EXPECT_EQ(reduce(w), z);
    EXPECT_TRUE(is_zero_to(carlitz_eval(ctx->m, w, ctx->W), prec));
    EXPECT_TRUE(w.equals_to(omega_newton(*ctx, z), prec));
    Elem z2 = ctx->F->add(z, 1);
    if (z2 != 0)
      EXPECT_TRUE(geometric_omega(*ctx, z2).equals_to(w + geometric_omega(*ctx, 1), prec));
  }
  // phi1 is a nonzero v-torsion point of valuation 1/(q^d - 1).
  RamifiedData rd = ramified_extend(*ctx);
  EXPECT_EQ(rd.phi1.val(), 1);
  EXPECT_TRUE(is_zero_to(carlitz_eval(v, rd.phi1, *rd.ring), prec * rd.ring->ram));
  Rational val = valuation(rd.varpi);
  EXPECT_EQ(val, (Rational{1, rd.ring->ram}));
}

INSTANTIATE_TEST_SUITE_P(Grid, ContextTest,
                         ::testing::Values(Ctx{3, "01", "21"}, Ctx{3, "01", "121"}, Ctx{3, "21", "11"},
                                           Ctx{3, "101", "01"}, Ctx{2, "01", "111"}, Ctx{2, "111", "01"},
                                           Ctx{2, "11", "001"}),
                         [](const auto& info) {
                           return "q" + std::to_string(info.param.q) + "_v" + info.param.v + "_n" + info.param.n;
                         });

TEST(Context, RejectsBadModuli) {
  FieldPtr Fq = F3();
  EXPECT_THROW(make_context(3, Poly::parse(Fq, "001"), Poly::parse(Fq, "21"), 8), std::invalid_argument);
  EXPECT_THROW(make_context(3, Poly::parse(Fq, "01"), Poly::parse(Fq, "01"), 8), std::invalid_argument);
}

}  // namespace
