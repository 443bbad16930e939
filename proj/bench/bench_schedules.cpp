// Serial reference vs phase-parallel engine, plus the individual phases.
//   ./bench_schedules --benchmark_filter=Run

#include <benchmark/benchmark.h>

#include "psso/benchmarks.hpp"
#include "psso/core.hpp"
#include "psso/parallel.hpp"

namespace {

using psso::bench::BenchmarkFn;
using psso::bench::FunctionId;

psso::SsoParams params_for(const BenchmarkFn& fn, std::size_t nsol, std::size_t niter) {
  psso::SsoParams p;
  p.nsol = nsol;
  p.nvar = fn.dimension();
  p.niter = niter;
  p.var_min = fn.var_min();
  p.var_max = fn.var_max();
  return p;
}

void BM_RunSequential(benchmark::State& state) {
  const BenchmarkFn fn(FunctionId::kF4, 50);
  const auto p = params_for(fn, static_cast<std::size_t>(state.range(0)), 100);
  const auto f = fn.objective();
  std::uint64_t seed = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(psso::run_sequential(p, f, seed++, {.record_trajectory = false}));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(p.nsol * p.niter));
}

void BM_RunParallel(benchmark::State& state) {
  const BenchmarkFn fn(FunctionId::kF4, 50);
  const auto p = params_for(fn, static_cast<std::size_t>(state.range(0)), 100);
  const auto f = fn.objective();
  const psso::ParallelOptions options{.workers = static_cast<int>(state.range(1)),
                                      .layout = static_cast<psso::LayoutMode>(state.range(2)),
                                      .record_trajectory = false};
  std::uint64_t seed = 1;
  for (auto _ : state) benchmark::DoNotOptimize(psso::run_parallel(p, f, seed++, options));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(p.nsol * p.niter));
}

void schedule_args(benchmark::internal::Benchmark* b) {
  for (std::int64_t nsol : {100, 200, 300, 350}) b->Arg(nsol);
}

void parallel_args(benchmark::internal::Benchmark* b) {
  for (std::int64_t nsol : {100, 200, 300, 350}) {
    for (std::int64_t workers : {1, 2, 4}) {
      b->Args({nsol, workers, 0});
    }
    b->Args({nsol, 4, 1});
  }
  b->ArgNames({"nsol", "workers", "interleaved"});
}

struct PhaseFixture {
  explicit PhaseFixture(std::size_t nsol, psso::LayoutMode layout)
      : fn(FunctionId::kF4, 50), params(params_for(fn, nsol, 1)), rng(7),
        swarm(psso::initialize(params, fn.objective(), rng, layout)) {}
  BenchmarkFn fn;
  psso::SsoParams params;
  psso::RngStream rng;
  psso::Swarm swarm;
};

void BM_SearchPhase(benchmark::State& state) {
  PhaseFixture fx(static_cast<std::size_t>(state.range(0)),
                  static_cast<psso::LayoutMode>(state.range(2)));
  std::uint32_t iter = 0;
  for (auto _ : state) {
    psso::search_phase(fx.swarm, fx.params, fx.rng, iter++, static_cast<int>(state.range(1)));
    benchmark::ClobberMemory();
  }
}

void BM_EvaluatePhase(benchmark::State& state) {
  PhaseFixture fx(static_cast<std::size_t>(state.range(0)),
                  static_cast<psso::LayoutMode>(state.range(2)));
  const auto f = fx.fn.objective();
  for (auto _ : state) {
    psso::evaluate_phase(fx.swarm, f, static_cast<int>(state.range(1)));
    benchmark::ClobberMemory();
  }
}

void BM_UpdatePhases(benchmark::State& state) {
  PhaseFixture fx(static_cast<std::size_t>(state.range(0)),
                  static_cast<psso::LayoutMode>(state.range(2)));
  for (auto _ : state) {
    psso::update_pbests_phase(fx.swarm, static_cast<int>(state.range(1)));
    psso::update_gbest_phase(fx.swarm, static_cast<int>(state.range(1)));
    benchmark::ClobberMemory();
  }
}

BENCHMARK(BM_RunSequential)->Apply(schedule_args)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_RunParallel)->Apply(parallel_args)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_SearchPhase)->Apply(parallel_args)->Unit(benchmark::kMicrosecond)->UseRealTime();
BENCHMARK(BM_EvaluatePhase)->Apply(parallel_args)->Unit(benchmark::kMicrosecond)->UseRealTime();
BENCHMARK(BM_UpdatePhases)->Apply(parallel_args)->Unit(benchmark::kMicrosecond)->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
