#include <gtest/gtest.h>

#include "json.hpp"

#include "ffgauss/theorem_lab.hpp"

using namespace ffg;

namespace {

FieldPtr F3() { return Field::get(3, 1); }

TEST(Compare, StatusesFollowPrecisionAndDigits) {
  FieldPtr F = F3();
  Series a = Series::from_coeffs(F, 0, {1, 2, 0, 1}, 4, Cap());
  Series b = Series::from_coeffs(F, 0, {1, 2, 0, 1, 2}, 6, Cap());
  Series c = Series::from_coeffs(F, 0, {1, 1}, 6, Cap());
  EXPECT_EQ(compare_series(a, b, 4).status, Status::Pass);
  Comparison inc = compare_series(a, b, 6);
  EXPECT_EQ(inc.status, Status::Inconclusive);
  EXPECT_EQ(inc.achieved, 4);
  EXPECT_EQ(compare_series(a, c, 2).status, Status::Fail);
  EXPECT_EQ(compare_elems(3, 3).status, Status::Pass);
  EXPECT_EQ(compare_elems(3, 4).status, Status::Fail);
  EXPECT_EQ(status_name(Status::Inconclusive), "inconclusive-precision");
}

TEST(Report, JsonCarriesTheSchemaFields) {
  VerificationReport r = verify_worked_example(3, 1, 8);
  EXPECT_TRUE(r.passed());
  auto j = nlohmann::json::parse(report_json(r));
  for (const char* k : {"theorem_id", "params", "status", "achieved_precision", "lhs", "rhs", "runtime_ms"})
    EXPECT_TRUE(j.contains(k)) << k;
  EXPECT_EQ(j["theorem_id"], "worked-example");
  EXPECT_EQ(j["status"], "pass");
  EXPECT_EQ(j["achieved_precision"], 8);
  EXPECT_EQ(j["runtime_ms"], 0);
  auto tsv = reports_tsv({r});
  EXPECT_EQ(tsv.substr(0, tsv.find('\n')), "theorem_id\tparams\tstatus\tachieved_precision\tnote");
}

TEST(Grid, DefaultGridRespectsBounds) {
  auto grid = default_grid();
  EXPECT_EQ(grid.size(), 50u);
  for (const auto& g : grid) {
    EXPECT_TRUE(g.q == 2 || g.q == 3);
    EXPECT_LE(g.v.deg(), 2);
    EXPECT_LE(g.n.deg(), 2);
    EXPECT_TRUE(is_irreducible(g.v));
    EXPECT_TRUE(gcd(g.v, g.n).is_one());
    long long size = 1;
    for (int i = 0; i < g.v.deg() * order_mod(g.v, g.n); ++i) size *= g.q;
    EXPECT_LE(size, 1 << 12);
  }
}

TEST(Grid, FractionsCoverAModN) {
  Poly n = Poly::parse(F3(), "121");
  EXPECT_EQ(grid_fractions(n, false).size(), 9u);
  EXPECT_EQ(grid_fractions(n, true).size(), 8u);
}

TEST(Suites, UnknownIdThrows) {
  EXPECT_THROW(run_suite("no-such-theorem", {}), std::invalid_argument);
  EXPECT_THROW(run_suite("gkt-nothing", {}), std::invalid_argument);
}

TEST(Suites, SinglePointRunsAreDeterministic) {
  SuiteOptions o;
  o.point = GridPoint{3, Poly::parse(F3(), "01"), Poly::parse(F3(), "21")};
  auto a = run_suite("all", o);
  auto b = run_suite("all", o);
  ASSERT_FALSE(a.empty());
  EXPECT_EQ(reports_json(a), reports_json(b));
  for (const auto& r : a) EXPECT_TRUE(r.passed()) << r.theorem_id << " " << r.note;
}

TEST(Suites, SubIdFiltersReports) {
  SuiteOptions o;
  o.point = GridPoint{3, Poly::parse(F3(), "01"), Poly::parse(F3(), "21")};
  auto rs = run_suite("gkt-ari", o);
  ASSERT_FALSE(rs.empty());
  for (const auto& r : rs) EXPECT_EQ(r.theorem_id, "gkt-ari");
}

TEST(Retry, RerunsInconclusiveWithExtraPrecision) {
  int calls = 0;
  auto r = with_retry(
      [&](long long p) {
        ++calls;
        VerificationReport rep;
        rep.theorem_id = "probe";
        rep.status = calls == 1 ? Status::Inconclusive : Status::Pass;
        rep.achieved_precision = p;
        return rep;
      },
      10);
  EXPECT_EQ(calls, 2);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.achieved_precision, 10);

  calls = 0;
  auto f = with_retry(
      [&](long long) {
        ++calls;
        VerificationReport rep;
        rep.status = Status::Fail;
        return rep;
      },
      10);
  EXPECT_EQ(calls, 1);
  EXPECT_EQ(f.status, Status::Fail);
}

TEST(Gamma, FunctionalEquationsOnASmallPoint) {
  GammaParams p;
  p.q = 3;
  p.v = Poly::parse(F3(), "01");
  p.x = RatFunc::parse(F3(), "1/21");
  p.y = PRat(1, 2);
  p.y2 = PRat(1, 4);
  p.n = 2;
  p.g = Poly::parse(F3(), "21");
  for (GammaEq e : {GammaEq::Reflection1, GammaEq::Reflection2, GammaEq::Multiplication, GammaEq::Levels}) {
    auto r = verify_gamma_functional(e, p, 6);
    EXPECT_TRUE(r.passed()) << gamma_eq_name(e) << " " << r.note;
  }
}

}  // namespace
