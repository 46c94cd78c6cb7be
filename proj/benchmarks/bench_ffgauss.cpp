#include <benchmark/benchmark.h>

#include "ffgauss/theorem_lab.hpp"

using namespace ffg;

namespace {

void BM_FieldMul(benchmark::State& st) {
  FieldPtr F = Field::get(3, static_cast<int>(st.range(0)));
  Elem a = 1, b = F->size() / 2 + 1;
  for (auto _ : st) {
    a = F->mul(a, b);
    if (a == 0) a = 1;
    benchmark::DoNotOptimize(a);
  }
}
BENCHMARK(BM_FieldMul)->Arg(2)->Arg(4)->Arg(7);

void BM_SeriesInverse(benchmark::State& st) {
  FieldPtr F = Field::get(3, 2);
  const long long prec = st.range(0);
  std::vector<Elem> c(prec);
  for (long long i = 0; i < prec; ++i) c[i] = static_cast<Elem>(1 + i % 8);
  Series s = Series::from_coeffs(F, 0, c, prec, Cap::absolute(prec));
  for (auto _ : st) benchmark::DoNotOptimize(s.inv());
}
BENCHMARK(BM_SeriesInverse)->Arg(8)->Arg(32)->Arg(128);

void BM_CarlitzEval(benchmark::State& st) {
  ResidueRing R{Field::get(3, 4), 11};
  Poly a = Poly::from_index(Field::get(3, 1), static_cast<std::uint64_t>(st.range(0)));
  Elem z = 5;
  for (auto _ : st) {
    z = carlitz_eval(a, z, R);
    if (z == 0) z = 5;
    benchmark::DoNotOptimize(z);
  }
}
BENCHMARK(BM_CarlitzEval)->Arg(10)->Arg(80)->Arg(700);

void BM_GeoGauss(benchmark::State& st) {
  FieldPtr F = Field::get(3, 1);
  const long long prec = st.range(0);
  const Poly v = Poly::parse(F, "101"), n = Poly::parse(F, "21");
  AFrac x{Poly::constant(F, 1), n};
  for (auto _ : st) {
    // contexts memoise the torsion lifts, so build one per iteration
    auto ctx = make_context(3, v, n, prec);
    benchmark::DoNotOptimize(geo_gauss_value(*ctx, x, Poly::constant(F, 1), 0));
  }
}
BENCHMARK(BM_GeoGauss)->Arg(8)->Arg(16)->Unit(benchmark::kMicrosecond);

void BM_GammaTwo(benchmark::State& st) {
  FieldPtr F = Field::get(3, 1);
  RatFunc x = RatFunc::parse(F, "1/21");
  for (auto _ : st) {
    // fresh engine so the level cache does not hide the work
    GammaEngine E = GammaEngine::standalone(3, Poly::parse(F, "101"), st.range(0));
    benchmark::DoNotOptimize(E.gamma_two(x, PRat(1, 5)));
  }
}
BENCHMARK(BM_GammaTwo)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_VerifyContext(benchmark::State& st) {
  SuiteOptions o;
  FieldPtr F = Field::get(3, 1);
  o.point = GridPoint{3, Poly::parse(F, "01"), Poly::parse(F, "121")};
  for (auto _ : st) benchmark::DoNotOptimize(run_suite("gkt", o));
}
BENCHMARK(BM_VerifyContext)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
