#include <gtest/gtest.h>

#include "ffgauss/local_inf.hpp"

using namespace ffg;

namespace {

FieldPtr F3() { return Field::get(3, 1); }

TEST(InfRing, ThetaHasOrderMinusOneAndSignOne) {
  for (int q : {2, 3, 4}) {
    InfRing R = make_inf_ring(Field::get(q, 1), 20);
    SignOrd so = sign_and_ord(R.theta(), q);
    EXPECT_EQ(so.ord, (Rational{-1, 1}));
    EXPECT_EQ(so.sign, InfSign::make(R.F, q, 1, 0));
    // theta~^{q-1} = -theta
    EXPECT_TRUE(R.theta_tilde().pow(q - 1).equals_to(-R.theta(), 10));
  }
}

TEST(InfSign, EtaPowerQMinusOneIsMinusOne) {
  FieldPtr F = F3();
  EXPECT_EQ(InfSign::make(F, 3, 1, 2), InfSign::make(F, 3, 2, 0));
  InfSign eta = InfSign::make(F, 3, 1, 1);
  EXPECT_EQ(eta.pow(4), InfSign::make(F, 3, 1, 0));
  EXPECT_EQ(eta.pow(-1) * eta, InfSign::make(F, 3, 1, 0));
}

TEST(CarlitzPeriod, HasOrderMinusQOverQMinusOne) {
  for (int q : {2, 3}) {
    InfRing R = make_inf_ring(Field::get(q, 1), 24);
    SignOrd so = sign_and_ord(carlitz_period(R), q);
    EXPECT_EQ(so.ord, (Rational{-q, q - 1}));
  }
}

TEST(Exponential, VanishesOnAAndIsCarlitzEquivariant) {
  InfRing R = make_inf_ring(F3(), 40);
  Poly m = Poly::parse(F3(), "121");
  EXPECT_TRUE(e_eval(R, RatFunc(Poly::parse(F3(), "12"))).is_zero());
  for (const char* b : {"1", "01", "21"}) {
    RatFunc x(Poly::parse(F3(), b), m);
    Series ex = e_eval(R, x);
    for (const char* a : {"01", "11", "201"}) {
      Poly ap = Poly::parse(F3(), a);
      Series lhs = carlitz_eval(ap, ex, R);
      Series rhs = e_eval(R, RatFunc(ap) * x);
      EXPECT_TRUE(lhs.equals_to(rhs, rhs.is_zero() ? lhs.val() : rhs.val() + 20)) << a << " " << b;
    }
    // m-torsion: C_m(e(x)) has no digit in the first 20 past val(e(x)).
    Series cm = carlitz_eval(m, ex, R);
    EXPECT_TRUE(cm.is_zero() || cm.val() > ex.val() + 20);
  }
}

TEST(DualExponential, VanishesOnA) {
  InfRing R = make_inf_ring(F3(), 20);
  EXPECT_TRUE(estar_eval(R, RatFunc(Poly::parse(F3(), "1201"))).is_zero());
}

TEST(Moore, DeterminantDetectsLinearDependence) {
  ResidueRing R{Field::get(3, 3), 5};
  const Field& G = *R.F;
  std::vector<Elem> xs{1, 5, G.add(1, G.mul(2, 5))};
  EXPECT_EQ(moore_det(R, xs), 0u);
  std::vector<Elem> ys{1, 3, 9};
  EXPECT_NE(moore_det(R, ys), 0u);
  EXPECT_EQ(moore_det(R, std::vector<Elem>{7}), 7u);
}

TEST(Ore, OneDimensionalDualIsInverseToTheQ) {
  ResidueRing R{Field::get(3, 2), 4};
  const Field& G = *R.F;
  for (Elem l = 1; l < G.size(); ++l) {
    auto st = ore_lambda_stars(R, std::vector<Elem>{l});
    ASSERT_EQ(st.size(), 1u);
    EXPECT_EQ(st[0], G.frob(G.inv(l), 1));
  }
}

TEST(Psi, SmallDegreesAgainstDirectProducts) {
  FieldPtr F = F3();
  RatFunc z = RatFunc::parse(F, "1/121");
  EXPECT_EQ(psi_n_eval(0, z), z);
  RatFunc acc(Poly::constant(F, 1));
  for (const Poly& a : enumerate_monic(F, 1)) acc = acc * (RatFunc(Poly::constant(F, 1)) + z / RatFunc(a));
  EXPECT_EQ(psi_n_eval(1, z), acc - RatFunc(Poly::constant(F, 1)));
  EXPECT_THROW(psi_n_eval(1, RatFunc::parse(F, "02")), std::domain_error);
}

}  // namespace
