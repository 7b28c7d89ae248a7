#include <benchmark/benchmark.h>

#include <numbers>

#include "btw/arcs.hpp"
#include "btw/iso_search.hpp"
#include "btw/nonconcentric.hpp"
#include "btw/pair_maps.hpp"

namespace {

const btw::ConcentricPair kHalf({0, 0}, 0.5, 1.0);

void BM_Automorphisms(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto cfg = btw::sample_configuration(kHalf, n, n / 6);
  for (auto _ : state) {
    benchmark::DoNotOptimize(btw::enumerate_automorphisms(cfg, btw::IsoKind::betweenness));
  }
}
BENCHMARK(BM_Automorphisms)->Arg(6)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_IncidenceCache(benchmark::State& state) {
  const auto cfg = btw::sample_configuration(kHalf, 12, 2);
  for (auto _ : state) benchmark::DoNotOptimize(btw::FiniteConfig(cfg.points()));
}
BENCHMARK(BM_IncidenceCache);

void BM_VerifyCover(benchmark::State& state) {
  const btw::ConcentricPair pair({0, 0}, 1.0, 2.0);
  const auto cert = btw::construct_cover(pair, 3.0 + 1.0 / static_cast<double>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(btw::verify_cover(pair, cert));
  state.counters["arcs"] = static_cast<double>(cert.alphas.size());
}
BENCHMARK(BM_VerifyCover)->Arg(5)->Arg(20)->Arg(100);

void BM_TangentChordStep(benchmark::State& state) {
  const btw::NestedCircles nested(btw::NonConcentricPair({0, 0}, 1.0, {0.1, -0.2}, 0.4));
  double theta = 0.3;
  for (auto _ : state) {
    theta = btw::tangent_chord_step(nested, theta, btw::Turn::ccw).theta;
    benchmark::DoNotOptimize(theta);
  }
}
BENCHMARK(BM_TangentChordStep);

}  // namespace

BENCHMARK_MAIN();
