#include <benchmark/benchmark.h>

#include "acats/ac_checks.hpp"
#include "acats/free_category.hpp"
#include "acats/generators.hpp"
#include "acats/geometry.hpp"
#include "acats/metcor.hpp"
#include "acats/metrized_category.hpp"

namespace {

using namespace acats;

void BM_ValidateFiniteExample(benchmark::State& state) {
  const ACStructure ac = finite_example(1.0, 0.7, 0.5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(validate(ac, 1).passed());
  }
}
BENCHMARK(BM_ValidateFiniteExample);

void BM_ValidateInduced(benchmark::State& state) {
  const ACStructure ac = induce_ac(random_metcat(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(validate(ac, 1).passed());
  }
  state.SetLabel(std::to_string(ac.arrow_count()) + " arrows");
}
BENCHMARK(BM_ValidateInduced)->Arg(3)->Arg(7)->Arg(11);

void BM_TransitivityCheck(benchmark::State& state) {
  const ACStructure ac = induce_ac(random_metcat(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_transitivity(ac, TransitivitySide::kBoth,
                                                nullptr, 1)
                                 .passed());
  }
}
BENCHMARK(BM_TransitivityCheck)->Arg(3)->Arg(7);

void BM_MinPlusCompose(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const FiniteMetricSpace X = random_metric_space(1, n);
  const FiniteMetricSpace Y = random_metric_space(2, n);
  const FiniteMetricSpace Z = random_metric_space(3, n);
  const Correspondence f = random_correspondence(4, X, Y);
  const Correspondence g = random_correspondence(5, Y, Z);
  for (auto _ : state) {
    benchmark::DoNotOptimize(compose(f, g));
  }
}
BENCHMARK(BM_MinPlusCompose)->Arg(4)->Arg(8)->Arg(16);

void BM_RewriteDistance(benchmark::State& state) {
  const ACStructure ac = finite_example(1.0, 1.0, 2.0);
  const PathWord from = make_word(ac, "x", {"e", "e"});
  const PathWord to = make_word(ac, "x", {"1"});
  const MoveGraphConfig cfg{static_cast<int>(state.range(0))};
  for (auto _ : state) {
    benchmark::DoNotOptimize(dmax_estimate(ac, from, to, cfg).value);
  }
}
BENCHMARK(BM_RewriteDistance)->Arg(3)->Arg(5)->Arg(7);

void BM_EmbeddingVerification(benchmark::State& state) {
  const ACStructure ac = induce_ac(random_metcat(state.range(0)));
  const MoveGraphConfig cfg{4};
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_embedding(ac, cfg).report.passed());
  }
}
BENCHMARK(BM_EmbeddingVerification)->Arg(3)->Arg(7);

void BM_TwoMetricCheck(benchmark::State& state) {
  const PlanarTwoMetric ptm =
      random_planar_two_metric(11, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_two_metric(ptm.table, 1).passed());
  }
}
BENCHMARK(BM_TwoMetricCheck)->Arg(4)->Arg(8)->Arg(12);

void BM_PathDistanceSquare(benchmark::State& state) {
  const std::vector<Point> corners = {{0, 0}, {1, 0}, {1, 1}, {0, 1}};
  const PLPath low{{{0, 0}, {1, 0}, {1, 1}}};
  const PLPath high{{{0, 0}, {0, 1}, {1, 1}}};
  const MoveGraphConfig cfg{static_cast<int>(state.range(0))};
  for (auto _ : state) {
    benchmark::DoNotOptimize(plpath_dmax(corners, low, high, cfg).value);
  }
}
BENCHMARK(BM_PathDistanceSquare)->Arg(3)->Arg(4);

}  // namespace

BENCHMARK_MAIN();
