#include <benchmark/benchmark.h>

#include <vector>

#include "negcurv/geodesic.hpp"
#include "negcurv/hyperbolicity.hpp"
#include "negcurv/kahler.hpp"
#include "negcurv/lipschitz.hpp"
#include "negcurv/radial_analysis.hpp"

using namespace negcurv;

static void BM_PotentialJet(benchmark::State& state) {
  const RadialPotential p = RadialPotential::exp();
  double x = 0.5;
  for (auto _ : state) {
    benchmark::DoNotOptimize(potential_jet(p, x));
    x += 1e-9;
  }
}
BENCHMARK(BM_PotentialJet);

static void BM_ConditionGrid(benchmark::State& state) {
  const auto grid = default_grid(5.0, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(check_conditions(RadialPotential::exp(), grid));
}
BENCHMARK(BM_ConditionGrid)->Arg(500);

static void BM_CurvatureTensor(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  CVector z = CVector::Zero(n);
  z[0] = 1.5;
  const PointCn pt{z};
  for (auto _ : state) benchmark::DoNotOptimize(curvature_tensor_at(RadialPotential::exp(), pt));
}
BENCHMARK(BM_CurvatureTensor)->Arg(1)->Arg(2)->Arg(4);

static void BM_CurvatureReport(benchmark::State& state) {
  const std::vector<double> radii{2.0, 3.0, 4.0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(curvature_range_report(RadialPotential::exp(), 2, radii, 2000, 7));
  }
}
BENCHMARK(BM_CurvatureReport)->Unit(benchmark::kMillisecond);

static void BM_FourPointDisc(benchmark::State& state) {
  const MetricSpaceHandle D = spaces::disc4(10.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(four_point_delta(D, static_cast<std::size_t>(state.range(0)), 0));
  }
}
BENCHMARK(BM_FourPointDisc)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

static void BM_KeyLemma(benchmark::State& state) {
  const ProductSpace P = disc_product(10.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(key_lemma_check(P, SchwarzConstants::make(-2.0, -4.0), 10000, 0));
  }
}
BENCHMARK(BM_KeyLemma)->Unit(benchmark::kMillisecond);

static void BM_GeodesicLogBall(benchmark::State& state) {
  const RealifiedMetric m(RadialPotential::log_ball(), 1);
  const RVector x0 = RVector::Zero(2);
  RVector v0(2);
  v0 << 1.0, 0.0;
  for (auto _ : state) benchmark::DoNotOptimize(integrate_geodesic(m, x0, v0, 5.0));
}
BENCHMARK(BM_GeodesicLogBall)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
