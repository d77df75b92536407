#include <benchmark/benchmark.h>

#include "spherix/frames.hpp"
#include "spherix/geodesic.hpp"
#include "spherix/indicatrix.hpp"
#include "spherix/validation.hpp"

using namespace spherix;

static void BM_ModifiedFrame(benchmark::State& state) {
  const CurveSpec spec(TwistedCubic{});
  double t = -1.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(modified_frame(eval_jet(spec, t)));
    t = t > 1.0 ? -1.0 : t + 1e-3;
  }
}
BENCHMARK(BM_ModifiedFrame);

static void BM_AtArclength(benchmark::State& state) {
  const CurveSpec spec(Salkowski{1.0});
  const double len = total_length(spec);
  double s = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(at_arclength(spec, s));
    s = s + 0.01 > len ? 0.0 : s + 0.01;
  }
}
BENCHMARK(BM_AtArclength);

static void BM_CovDerivClosed(benchmark::State& state) {
  const ModifiedFrame f = modified_frame(CurveSpec(Salkowski{1.0}), 0.3);
  for (auto _ : state) benchmark::DoNotOptimize(cov_deriv_closed(IndicatrixKind::Pole, f));
}
BENCHMARK(BM_CovDerivClosed);

static void BM_CovDerivOracle(benchmark::State& state) {
  const CurveSpec spec(Salkowski{1.0});
  const double t = at_arclength(spec, 0.3);
  for (auto _ : state) benchmark::DoNotOptimize(cov_deriv_numeric_at(IndicatrixKind::Pole, spec, t));
}
BENCHMARK(BM_CovDerivOracle);

static void BM_GammaSphereDet(benchmark::State& state) {
  const CurveSpec spec(Helix{2.0, 1.0});
  for (auto _ : state) benchmark::DoNotOptimize(gamma_sphere_det_at(IndicatrixKind::Tangent, spec, 0.5));
}
BENCHMARK(BM_GammaSphereDet);

static void BM_ValidationSuite(benchmark::State& state) {
  ValidationOptions options;
  options.samples = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(run_validation(options));
}
BENCHMARK(BM_ValidationSuite)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
