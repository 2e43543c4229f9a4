// Serial reference vs OpenMP kernel, same inputs. Worker count follows NCFLAB_THREADS.

#include <benchmark/benchmark.h>

#include <random>

#include "ncflab/anf.hpp"
#include "ncflab/complexity.hpp"
#include "ncflab/parallel.hpp"
#include "ncflab/symmetry.hpp"
#include "ncflab/verify.hpp"

namespace {

ncflab::BooleanFunction random_function(int n) {
  std::mt19937_64 rng(1234 + static_cast<unsigned>(n));
  std::bernoulli_distribution coin(0.5);
  return ncflab::BooleanFunction::from_predicate(n, [&](ncflab::Index) { return coin(rng); });
}

void BM_CertProfileSerial(benchmark::State& state) {
  const auto f = random_function(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(ncflab::cert_profile_serial(f));
}

void BM_CertProfileParallel(benchmark::State& state) {
  const auto f = random_function(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(ncflab::cert_profile(f));
}

void BM_SensitivitySerial(benchmark::State& state) {
  const auto f = random_function(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(ncflab::sensitivity_serial(f));
}

void BM_SensitivityParallel(benchmark::State& state) {
  const auto f = random_function(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(ncflab::sensitivity(f));
}

// An asymmetric random function forces the full n! sweep.
void BM_AutomorphismSerial(benchmark::State& state) {
  const auto f = random_function(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(ncflab::strong_asymmetry_brute_force_serial(f));
}

void BM_AutomorphismParallel(benchmark::State& state) {
  const auto f = random_function(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(ncflab::strong_asymmetry_brute_force(f));
}

void BM_CensusSerial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ncflab::census_serial(n));
}

void BM_CensusParallel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ncflab::census(n));
}

}  // namespace

BENCHMARK(BM_CertProfileSerial)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CertProfileParallel)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SensitivitySerial)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SensitivityParallel)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AutomorphismSerial)->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AutomorphismParallel)->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CensusSerial)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CensusParallel)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

int main(int argc, char** argv) {
  ncflab::configure_workers_from_env();
  benchmark::Initialize(&argc, argv);
  if (benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
  benchmark::RunSpecifiedBenchmarks();
  benchmark::Shutdown();
  return 0;
}
