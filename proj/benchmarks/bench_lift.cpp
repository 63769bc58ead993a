#include <benchmark/benchmark.h>

#include "hmlift/analysis.hpp"
#include "hmlift/kaehler.hpp"
#include "hmlift/lift.hpp"
#include "hmlift/maps.hpp"
#include "hmlift/numeric.hpp"
#include "support/fixtures.hpp"
#include "support/gen.hpp"
#include "support/reference.hpp"

using namespace hmlift;

namespace {

RealPolyMap quaternion_real() { return real_identification(test::catalog_complex("ex1.4.iii-quaternion")); }

void BM_PolyMultiply(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  RealPoly s = RealPoly::constant(n, Layout::Real, 1);
  for (std::size_t k = 0; k < n; ++k) s += RealPoly::variable(n, Layout::Real, k);
  const RealPoly a = s.pow(3), b = a + RealPoly::variable(n, Layout::Real, 0);
  state.counters["terms"] = static_cast<double>(a.size());
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_PolyMultiply)->Arg(4)->Arg(8)->Arg(12);

void BM_QuaternionRealLift(benchmark::State& state) {
  const RealPolyMap q = quaternion_real();
  for (auto _ : state) benchmark::DoNotOptimize(complete_lift_real(q));
}
BENCHMARK(BM_QuaternionRealLift);

void BM_HwcOfQr(benchmark::State& state) {
  const RealPolyMap qr = complete_lift_real(quaternion_real());
  for (auto _ : state) benchmark::DoNotOptimize(hwc_certificate(qr));
}
BENCHMARK(BM_HwcOfQr);

void BM_AntiLiftRoundTrip(benchmark::State& state) {
  test::Gen g(2);
  const RealPolyMap lift = complete_lift_real(g.real_map(4, 3, 4));
  for (auto _ : state) benchmark::DoNotOptimize(anti_lift(lift, LiftSplit{4}));
}
BENCHMARK(BM_AntiLiftRoundTrip);

void BM_GradientSpanRank(benchmark::State& state) {
  const RealPolyMap phi = real_identification(test::catalog_complex("ex3.7-R16-to-C"));
  const auto points = test::reference_points();
  for (auto _ : state) benchmark::DoNotOptimize(span_report(phi, points));
}
BENCHMARK(BM_GradientSpanRank)->Unit(benchmark::kMillisecond);

void BM_NumericStereographic(benchmark::State& state) {
  const SmoothMap h = test::catalog_smooth("ex1.4.iv-hyperbolic-stereographic");
  const auto pts = sample_points(h, 100, 1, Box(3, {-2.0, 2.0}));
  for (auto _ : state) benchmark::DoNotOptimize(numeric_check(h, pts));
}
BENCHMARK(BM_NumericStereographic)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
