#include <benchmark/benchmark.h>

#include "troplift/field.hpp"
#include "troplift/lifting.hpp"
#include "troplift/parse.hpp"
#include "troplift/series.hpp"
#include "troplift/tropical.hpp"

using namespace troplift;

namespace {

const char* kCurve = "-3*t^2 + 3*t*x - t^2*y + t*x*y - t^3*x*y^4 + (t^4+t^5)*y^4 + x^5";

PuiseuxSeries dense_series(const Field& K, int terms) {
  PuiseuxSeries s;
  for (int k = 0; k < terms; ++k)
    s.terms.emplace_back(Rational(k, 2), K.from_int(2 * k + 1));
  return s;
}

void BM_SeriesMul(benchmark::State& state) {
  Field K;
  PuiseuxSeries a = dense_series(K, 30);
  PuiseuxSeries b = dense_series(K, 30);
  for (auto _ : state) benchmark::DoNotOptimize(mul(K, a, b));
}
BENCHMARK(BM_SeriesMul);

void BM_TropEval(benchmark::State& state) {
  Field K;
  TropicalPoly T = tropicalize(parse_polynomial(K, kCurve).poly);
  std::vector<Rational> b{Rational(1), Rational(0)};
  for (auto _ : state) benchmark::DoNotOptimize(trop_eval(T, b));
}
BENCHMARK(BM_TropEval);

void BM_PolygonCandidates(benchmark::State& state) {
  Field K;
  // degree-20 product with a staircase of coefficient orders
  SeriesPoly f;
  f.n = 1;
  for (unsigned d = 0; d <= 20; ++d)
    add_term(K, f, {d}, series_term(K, Rational((20 - d) * (20 - d), 3), K.one()));
  for (auto _ : state) benchmark::DoNotOptimize(newton_polygon_candidates(f));
}
BENCHMARK(BM_PolygonCandidates);

void BM_UnivariateDeep(benchmark::State& state) {
  Field K;
  SeriesPoly f = parse_polynomial(K, "x^2 + 2*x - t").poly;
  for (auto _ : state)
    benchmark::DoNotOptimize(
        univariate_lift(K, f, Rational(1), K.from_rational(Rational(1, 2)), Rational(30)));
}
BENCHMARK(BM_UnivariateDeep);

void BM_MultivariateLift(benchmark::State& state) {
  Field K;
  ParsedPolynomial parsed = parse_polynomial(K, kCurve);
  LiftRequest req{parsed.poly, {Rational(1), Rational(0)}, {K.one(), K.from_int(-3)},
                  Rational(10)};
  for (auto _ : state) benchmark::DoNotOptimize(multivariate_lift(K, req));
}
BENCHMARK(BM_MultivariateLift);

}  // namespace

BENCHMARK_MAIN();
