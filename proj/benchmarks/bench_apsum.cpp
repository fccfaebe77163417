#include <benchmark/benchmark.h>

#include "apsum/family.hpp"
#include "apsum/frobenius.hpp"
#include "apsum/ideal.hpp"
#include "apsum/semigroup.hpp"
#include "apsum/sweeps.hpp"
#include "apsum/tangent_cone.hpp"

namespace {

apsum::ArithmeticSeed seed_for(const benchmark::State& state) { return apsum::ArithmeticSeed::make(state.range(0), 7); }

void BM_AperyOracle(benchmark::State& state) {
  const auto seed = seed_for(state);
  const auto gens = apsum::partial_sum_generators(seed);
  for (auto _ : state) benchmark::DoNotOptimize(apsum::apery_oracle(gens, seed.a()));
}
BENCHMARK(BM_AperyOracle)->Arg(23)->Arg(60)->Arg(120);

void BM_AperyClosedForm(benchmark::State& state) {
  const auto seed = seed_for(state);
  for (auto _ : state) benchmark::DoNotOptimize(apsum::apery_set_gamma5(seed));
}
BENCHMARK(BM_AperyClosedForm)->Arg(23)->Arg(60)->Arg(120);

void BM_PFOracle(benchmark::State& state) {
  const auto seed = seed_for(state);
  for (auto _ : state) benchmark::DoNotOptimize(apsum::pf_oracle(seed));
}
BENCHMARK(BM_PFOracle)->Arg(23)->Arg(60);

void BM_Gastinger(benchmark::State& state) {
  const auto seed = seed_for(state);
  for (auto _ : state) benchmark::DoNotOptimize(apsum::gastinger_verify(seed));
}
BENCHMARK(BM_Gastinger)->Arg(23)->Arg(60);

void BM_AperyTable(benchmark::State& state) {
  const auto seed = seed_for(state);
  for (auto _ : state) benchmark::DoNotOptimize(apsum::apery_table(seed));
}
BENCHMARK(BM_AperyTable)->Arg(23)->Arg(60);

void BM_SweepUniqueness(benchmark::State& state) {
  const auto jobs = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(apsum::sweep_uniqueness(5, {11, 40}, {1, 10}, {.jobs = jobs}));
  }
}
BENCHMARK(BM_SweepUniqueness)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
