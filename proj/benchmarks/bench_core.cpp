#include <benchmark/benchmark.h>

#include "causalab/identifier.hpp"
#include "causalab/operators.hpp"
#include "causalab/settings.hpp"
#include "causalab/statistics.hpp"
#include "causalab/strategy.hpp"

namespace {

using namespace causalab;

void bm_kron_4x4(benchmark::State& state) {
  const CMat a = random_density(4, 7);
  const CMat b = random_density(4, 8);
  for (auto _ : state) benchmark::DoNotOptimize(kron(a, b));
}
BENCHMARK(bm_kron_4x4);

void bm_partial_trace_16(benchmark::State& state) {
  const CMat w = process_matrix_of(reference_strategy("sq"));
  const std::vector<int> dims = {2, 2, 2, 2};
  for (auto _ : state)
    benchmark::DoNotOptimize(partial_trace(w, dims, {0, 2}));
}
BENCHMARK(bm_partial_trace_16);

void bm_simulate_catalog(benchmark::State& state) {
  const StrategySpec spec = reference_strategy("sq12");
  const MpSetting setting = catalog_e1_setting(1);
  for (auto _ : state) benchmark::DoNotOptimize(simulate_distribution(spec, setting));
}
BENCHMARK(bm_simulate_catalog);

void bm_born_backend(benchmark::State& state) {
  const StrategySpec spec = reference_strategy("sc12");
  const CMat w = process_matrix_of(spec);
  const MpSetting setting = catalog_e1_setting(1);
  for (auto _ : state)
    benchmark::DoNotOptimize(born_distribution(w, spec.dims(), setting));
}
BENCHMARK(bm_born_backend);

void bm_reconstruct_process_matrix(benchmark::State& state) {
  const StrategySpec spec = reference_strategy("sq12");
  for (auto _ : state) benchmark::DoNotOptimize(reconstruct_process_matrix(spec));
}
BENCHMARK(bm_reconstruct_process_matrix);

void bm_sample_counts_1e6(benchmark::State& state) {
  const JointDistribution dist =
      simulate_distribution(reference_strategy("sq"), catalog_e1_setting(1));
  std::uint64_t seed = 1;
  for (auto _ : state)
    benchmark::DoNotOptimize(sample_counts(dist, 1000000, seed++));
}
BENCHMARK(bm_sample_counts_1e6);

void bm_step1_identify(benchmark::State& state) {
  const JointDistribution dist =
      simulate_distribution(reference_strategy("sc12"), catalog_e1_setting(1));
  const CountsTable counts = sample_counts(dist, 1000000, 11);
  for (auto _ : state) benchmark::DoNotOptimize(step1_identify(counts, 0.05));
}
BENCHMARK(bm_step1_identify);

void bm_exact_ci_deviation(benchmark::State& state) {
  const JointDistribution dist = simulate_distribution(
      reference_strategy("sq"), tomographically_complete_setting(2, 2, 2, 2));
  for (auto _ : state)
    benchmark::DoNotOptimize(
        exact_ci_deviation(dist, MarkovCondition::ChainK1J1J2K2));
}
BENCHMARK(bm_exact_ci_deviation);

}  // namespace

BENCHMARK_MAIN();
