// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include "advlab/harness.hpp"
#include "advlab/language.hpp"
#include "advlab/np_machine.hpp"

using namespace advlab;

namespace {

Language brute_force_language() {
  return Language::predicate(
      "bench", 24, parse_expr("(x[0] ^ x[3]) & !(x[5] | x[7] & x[2]) ^ (x[9] & x[11] | x[13])"));
}

// No certificate satisfies it, so the whole space is scanned.
Expr dead_verifier() {
  return parse_expr("c[0] & c[19] & (x[0] ^ c[7]) & !(c[0] | c[3] & c[11]) & c[5]");
}

void BM_members_at_serial(benchmark::State& state) {
  const Language L = brute_force_language();
  for (auto _ : state) benchmark::DoNotOptimize(members_at_serial(L, state.range(0)));
}

void BM_members_at_parallel(benchmark::State& state) {
  const Language L = brute_force_language();
  for (auto _ : state) benchmark::DoNotOptimize(members_at(L, state.range(0)));
}

void BM_find_witness_serial(benchmark::State& state) {
  const Expr v = dead_verifier();
  const Word x = Word::parse("1");
  for (auto _ : state) benchmark::DoNotOptimize(find_witness_serial(v, x, state.range(0)));
}

void BM_find_witness_parallel(benchmark::State& state) {
  const Expr v = dead_verifier();
  const Word x = Word::parse("1");
  for (auto _ : state) benchmark::DoNotOptimize(find_witness(v, x, state.range(0)));
}

ExperimentConfig trials_config() {
  ExperimentConfig cfg;
  cfg.seed = 1;
  cfg.n_max = 10;
  cfg.trials = 32;
  cfg.experiment = Experiment::SparseCompile;
  return cfg;
}

void BM_run_experiment_serial(benchmark::State& state) {
  const ExperimentConfig cfg = trials_config();
  for (auto _ : state) benchmark::DoNotOptimize(run_experiment_serial(cfg));
}

void BM_run_experiment_parallel(benchmark::State& state) {
  const ExperimentConfig cfg = trials_config();
  for (auto _ : state) benchmark::DoNotOptimize(run_experiment(cfg));
}

}  // namespace

BENCHMARK(BM_members_at_serial)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_members_at_parallel)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_find_witness_serial)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_find_witness_parallel)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_run_experiment_serial)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_run_experiment_parallel)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
