#include <benchmark/benchmark.h>

#include "discrep/discrepancy.hpp"
#include "discrep/haar.hpp"
#include "discrep/pointset.hpp"
#include "discrep/testfn.hpp"

using namespace discrep;

static void BM_WarnockExact(benchmark::State& state) {
  PointSet ps = generate_van_der_corput(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(l2_norm_exact(ps).value);
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_WarnockExact)->RangeMultiplier(4)->Range(256, 16384)->Complexity();

static void BM_DiscrepancyValues(benchmark::State& state) {
  PointSet ps = generate_van_der_corput(1024);
  auto set = make_samples(2, static_cast<std::size_t>(state.range(0)), 5);
  for (auto _ : state) benchmark::DoNotOptimize(discrepancy_values(ps, set));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_DiscrepancyValues)->Range(1 << 12, 1 << 18);

static void BM_AllCoefficients(benchmark::State& state) {
  PointSet ps = generate_van_der_corput(4096);
  ShapeVector shape{{static_cast<int>(state.range(0)),
                     static_cast<int>(state.range(0))}};
  for (auto _ : state) benchmark::DoNotOptimize(all_coefficients(ps, shape));
}
BENCHMARK(BM_AllCoefficients)->DenseRange(4, 10, 2);

static void BM_GreedyRFunction(benchmark::State& state) {
  PointSet ps = generate_van_der_corput(4096);
  ShapeVector shape{{7, 6}};
  for (auto _ : state)
    benchmark::DoNotOptimize(build_r_function_greedy(ps, shape).inner_product);
}
BENCHMARK(BM_GreedyRFunction);

static void BM_BuildZ(benchmark::State& state) {
  PointSet ps = generate_van_der_corput(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(build_Z(ps).component_count());
}
BENCHMARK(BM_BuildZ)->RangeMultiplier(4)->Range(256, 4096);

static void BM_OrliczNorm(benchmark::State& state) {
  PointSet ps = generate_van_der_corput(512);
  auto set = make_samples(2, 50000, 9);
  auto values = discrepancy_values(ps, set);
  OrliczSpec spec = OrliczSpec::llogl(1.0);
  for (auto _ : state)
    benchmark::DoNotOptimize(orlicz_norm_from_values(values, spec, 1e-6, 9).value);
}
BENCHMARK(BM_OrliczNorm);

static void BM_VerifyNet(benchmark::State& state) {
  PointSet ps = generate_faure_net(2, static_cast<std::uint32_t>(state.range(0)), 2);
  for (auto _ : state)
    benchmark::DoNotOptimize(verify_net(ps, 2, static_cast<std::uint32_t>(state.range(0))).ok);
}
BENCHMARK(BM_VerifyNet)->DenseRange(6, 12, 2);

BENCHMARK_MAIN();
