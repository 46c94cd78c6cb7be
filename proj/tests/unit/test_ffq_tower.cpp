#include <gtest/gtest.h>

#include <random>
#include <set>

#include "ffgauss/ffq_tower.hpp"

using namespace ffg;

namespace {

struct QM {
  int q, m;
};

class FieldAxioms : public ::testing::TestWithParam<QM> {};

TEST_P(FieldAxioms, RingLawsOnSamples) {
  auto [q, m] = GetParam();
  FieldPtr F = Field::get(q, m);
  std::mt19937 rng(1234);
  std::uniform_int_distribution<Elem> pick(0, F->size() - 1);
  for (int it = 0; it < 300; ++it) {
    Elem a = pick(rng), b = pick(rng), c = pick(rng);
    EXPECT_EQ(F->add(a, b), F->add(b, a));
    EXPECT_EQ(F->mul(a, b), F->mul(b, a));
    EXPECT_EQ(F->mul(a, F->add(b, c)), F->add(F->mul(a, b), F->mul(a, c)));
    EXPECT_EQ(F->add(a, F->neg(a)), 0u);
    if (a != 0) EXPECT_EQ(F->mul(a, F->inv(a)), 1u);
  }
}

TEST_P(FieldAxioms, FrobeniusIsAnAutomorphismOfOrderM) {
  auto [q, m] = GetParam();
  FieldPtr F = Field::get(q, m);
  for (Elem a = 0; a < F->size(); ++a) {
    EXPECT_EQ(F->frob(a, m), a);
    EXPECT_EQ(F->frob(a, 1), F->pow(a, q));
    EXPECT_EQ(F->frob(F->frob(a, 1), -1), a);
  }
  Elem g = F->primitive();
  std::set<Elem> seen;
  Elem x = 1;
  for (Elem k = 0; k < F->order(); ++k, x = F->mul(x, g)) seen.insert(x);
  EXPECT_EQ(seen.size(), static_cast<size_t>(F->order()));
}

TEST_P(FieldAxioms, SubfieldIndicesAreTheBaseField) {
  auto [q, m] = GetParam();
  FieldPtr F = Field::get(q, m);
  FieldPtr B = Field::get(q, 1);
  for (Elem a = 0; a < static_cast<Elem>(q); ++a) {
    EXPECT_TRUE(F->in_subfield(a, 1));
    for (Elem b = 0; b < static_cast<Elem>(q); ++b) {
      EXPECT_EQ(F->add(a, b), B->add(a, b));
      EXPECT_EQ(F->mul(a, b), B->mul(a, b));
    }
  }
}

TEST_P(FieldAxioms, TraceIsLinearAndNormMultiplicative) {
  auto [q, m] = GetParam();
  FieldPtr F = Field::get(q, m);
  FieldPtr B = Field::get(q, 1);
  std::mt19937 rng(99);
  std::uniform_int_distribution<Elem> pick(0, F->size() - 1);
  for (int it = 0; it < 100; ++it) {
    FFElem a{F, pick(rng)}, b{F, pick(rng)};
    auto [ta, na] = trace_norm(a, B);
    auto [tb, nb] = trace_norm(b, B);
    auto [tab, nab] = trace_norm(a + b, B);
    auto [tp, np] = trace_norm(a * b, B);
    (void)tp;
    EXPECT_LT(ta.v, static_cast<Elem>(q));
    EXPECT_EQ(tab.v, B->add(ta.v, tb.v));
    EXPECT_EQ(np.v, B->mul(na.v, nb.v));
    (void)nab;
  }
}

INSTANTIATE_TEST_SUITE_P(Small, FieldAxioms,
                         ::testing::Values(QM{2, 1}, QM{2, 3}, QM{3, 1}, QM{3, 2}, QM{4, 1}, QM{4, 2}, QM{2, 4},
                                           QM{3, 4}, QM{5, 2}, QM{9, 1}),
                         [](const auto& info) {
                           return "q" + std::to_string(info.param.q) + "m" + std::to_string(info.param.m);
                         });

TEST(Field, SameParametersReturnTheSameObject) {
  EXPECT_EQ(Field::get(3, 2).get(), Field::get(3, 2).get());
  EXPECT_EQ(Field::get(4, 1)->p(), 2);
  EXPECT_EQ(Field::get(4, 1)->e(), 2);
  EXPECT_EQ(Field::get(27, 1)->size(), 27u);
}

TEST(Field, RejectsNonPrimePowers) {
  EXPECT_THROW(Field::get(6, 1), std::invalid_argument);
  EXPECT_THROW(prime_power(12), std::invalid_argument);
  EXPECT_EQ(prime_power(8), std::make_pair(2, 3));
}

TEST(Field, F4HasCharacteristicTwoArithmetic) {
  FieldPtr F = Field::get(4, 1);
  for (Elem a = 0; a < 4; ++a) EXPECT_EQ(F->add(a, a), 0u);
  Elem w = F->primitive();
  // w^2 + w + 1 = 0
  EXPECT_EQ(F->add(F->add(F->mul(w, w), w), 1), 0u);
}

TEST(Embedding, IsARingHomomorphism) {
  FieldPtr S = Field::get(3, 2), L = Field::get(3, 4);
  auto e = Embedding::standard(S, L);
  for (Elem a = 0; a < S->size(); ++a)
    for (Elem b = 0; b < S->size(); ++b) {
      EXPECT_EQ(e->operator()(S->add(a, b)), L->add((*e)(a), (*e)(b)));
      EXPECT_EQ(e->operator()(S->mul(a, b)), L->mul((*e)(a), (*e)(b)));
    }
  for (Elem a = 0; a < S->size(); ++a) {
    EXPECT_TRUE(L->in_subfield((*e)(a), 2));
    EXPECT_EQ(e->back((*e)(a)), a);
  }
}

TEST(Fpoly, DivmodAndRoots) {
  FieldPtr F = Field::get(3, 1);
  fpoly::P f{1, 0, 1};  // X^2 + 1, irreducible over F_3
  EXPECT_TRUE(fpoly::is_irreducible(*F, f));
  FieldPtr L = Field::get(3, 2);
  auto roots = roots_over(F, f, L);
  ASSERT_EQ(roots.size(), 2u);
  for (Elem r : roots) EXPECT_EQ(fpoly::eval(*L, f, r), 0u);
  fpoly::P a{2, 1, 0, 1}, b{1, 1};
  auto [qt, r] = fpoly::divmod(*F, a, b);
  EXPECT_EQ(fpoly::add(*F, fpoly::mul(*F, qt, b), r), a);
  EXPECT_LT(fpoly::deg(r), fpoly::deg(b));
}

TEST(Primes, Small) {
  EXPECT_TRUE(is_prime(2));
  EXPECT_TRUE(is_prime(97));
  EXPECT_FALSE(is_prime(1));
  EXPECT_FALSE(is_prime(91));
}

}  // namespace
