#include <gtest/gtest.h>

#include <random>

#include "ffgauss/carlitz_core.hpp"
#include "ffgauss/local_v.hpp"

using namespace ffg;

namespace {

FieldPtr F3() { return Field::get(3, 1); }

ResidueRing ring_over(int q, int m, Elem t) { return ResidueRing{Field::get(q, m), t}; }

TEST(CarlitzCoeffs, ThetaAndThetaSquared) {
  Poly th = Poly::theta(F3());
  auto c1 = carlitz_coeffs(th);
  ASSERT_EQ(c1.c.size(), 2u);
  EXPECT_EQ(c1.c[0], th);
  EXPECT_TRUE(c1.c[1].is_one());
  auto c2 = carlitz_coeffs(th * th);
  ASSERT_EQ(c2.c.size(), 3u);
  EXPECT_EQ(c2.c[0], th * th);
  EXPECT_EQ(c2.c[1], th + th.pow(3));
  EXPECT_TRUE(c2.c[2].is_one());
}

TEST(CarlitzCoeffs, InRingMatchesExactCoefficients) {
  ResidueRing R = ring_over(3, 4, 7);
  for (std::uint64_t i = 1; i < 81; i += 4) {
    Poly a = Poly::from_index(F3(), i);
    auto exact = carlitz_coeffs(a).c;
    auto in = carlitz_coeffs_in(R, a);
    ASSERT_EQ(exact.size(), in.size());
    for (size_t k = 0; k < in.size(); ++k) EXPECT_EQ(R.embed(exact[k]), in[k]);
  }
}

TEST(Carlitz, IsAnFqLinearRingHomomorphism) {
  ResidueRing R = ring_over(3, 4, 11);
  const Field& G = *R.F;
  std::mt19937 rng(5);
  std::uniform_int_distribution<Elem> pick(0, G.size() - 1);
  for (int it = 0; it < 40; ++it) {
    Poly a = Poly::from_index(F3(), 1 + rng() % 80), b = Poly::from_index(F3(), 1 + rng() % 80);
    Elem z = pick(rng), w = pick(rng), c = rng() % 3;
    EXPECT_EQ(carlitz_eval(a * b, z, R), carlitz_eval(a, carlitz_eval(b, z, R), R));
    EXPECT_EQ(carlitz_eval(a + b, z, R), G.add(carlitz_eval(a, z, R), carlitz_eval(b, z, R)));
    EXPECT_EQ(carlitz_eval(a, G.add(z, G.mul(c, w)), R),
              G.add(carlitz_eval(a, z, R), G.mul(c, carlitz_eval(a, w, R))));
  }
}

TEST(Adjoint, CompositionAndRaisedForm) {
  ResidueRing R = ring_over(3, 4, 11);
  const Field& G = *R.F;
  for (std::uint64_t i = 1; i < 40; i += 3)
    for (std::uint64_t j = 1; j < 20; j += 5) {
      Poly a = Poly::from_index(F3(), i), b = Poly::from_index(F3(), j);
      for (Elem z : {Elem{1}, Elem{5}, Elem{42}}) {
        EXPECT_EQ(adjoint_eval(a * b, z, R), adjoint_eval(a, adjoint_eval(b, z, R), R));
        EXPECT_EQ(adjoint_eval_raised(a, z, R), G.frob(adjoint_eval(a, z, R), a.deg()));
      }
    }
}

TEST(Cyclotomic, DegreeIsEulerPhiAndRootsHaveExactOrder) {
  struct Case {
    int q;
    const char* v;
    const char* n;
  };
  for (Case c : {Case{3, "01", "21"}, Case{3, "01", "121"}, Case{3, "11", "101"}, Case{2, "01", "111"},
                 Case{2, "11", "001"}}) {
    FieldPtr Fq = Field::get(c.q, 1);
    Poly v = Poly::parse(Fq, c.v), n = Poly::parse(Fq, c.n);
    PolyA cyc = cyclotomic_poly(n);
    long long phi = 1;
    for (auto [p, e] : factor(n)) {
      long long qd = 1;
      for (int i = 0; i < p.deg(); ++i) qd *= c.q;
      phi *= qd - 1;
      for (int i = 1; i < e; ++i) phi *= qd;
    }
    EXPECT_EQ(static_cast<long long>(cyc.size()) - 1, phi) << c.n;
    const int dl = v.deg() * order_mod(v, n);
    FieldPtr G = Field::get(c.q, dl);
    auto t0s = roots_over(Fq, v.coeffs(), G);
    ASSERT_FALSE(t0s.empty());
    ResidueRing R{G, t0s.front()};
    fpoly::P red = polya_reduce(cyc, *G, R.t);
    int found = 0;
    for (Elem z = 1; z < G->size(); ++z) {
      if (fpoly::eval(*G, red, z) != 0) continue;
      ++found;
      EXPECT_EQ(carlitz_eval(n, z, R), 0u);
      for (auto [p, e] : factor(n)) EXPECT_NE(carlitz_eval(n / p, z, R), 0u);
    }
    EXPECT_EQ(found, phi);
  }
}

TEST(OrderMod, SmallCases) {
  Poly th = Poly::theta(F3());
  EXPECT_EQ(order_mod(th, Poly::parse(F3(), "21")), 1);
  EXPECT_EQ(order_mod(th, Poly::parse(F3(), "101")), 4);
  EXPECT_EQ(order_mod(Poly::parse(F3(), "21"), Poly::parse(F3(), "01")), 2);
}

TEST(PolyA, ExactDivisionInvertsMultiplication) {
  Poly n = Poly::parse(F3(), "121");
  PolyA x = carlitz_as_poly(n), y = carlitz_as_poly(Poly::parse(F3(), "11"));
  PolyA prod = polya_mul(x, y);
  EXPECT_EQ(polya_div_exact(prod, y), x);
}

TEST(Twisted, MultiplicationTwistsByFrobenius) {
  ResidueRing R = ring_over(3, 2, 5);
  TwistedPoly<Elem> tau{{0, 1}}, alpha{{4}};
  auto ta = twisted_mul(R, tau, alpha);
  ASSERT_EQ(ta.coeffs.size(), 2u);
  EXPECT_EQ(ta.coeffs[0], 0u);
  EXPECT_EQ(ta.coeffs[1], R.F->frob(4, 1));
}

// a C_n(tau) = (1 - tau) h(tau) + closure tau^N.
TEST(PoonenH, FactorisationIdentity) {
  ResidueRing R = ring_over(3, 4, 11);
  Poly n = Poly::parse(F3(), "121");
  for (Elem a : {Elem{1}, Elem{17}, Elem{60}}) {
    Elem closure = 0;
    auto h = poonen_h(a, n, R, &closure);
    auto cs = carlitz_coeffs_in(R, n);
    TwistedPoly<Elem> one_minus_tau{{1, R.F->neg(1)}};
    auto lhs = twisted_mul(R, one_minus_tau, h);
    lhs.coeffs.resize(cs.size(), 0);
    lhs.coeffs.back() = R.F->add(lhs.coeffs.back(), closure);
    for (size_t i = 0; i < cs.size(); ++i) EXPECT_EQ(lhs.coeffs[i], R.F->mul(a, cs[i]));
  }
}

}  // namespace
