#include "psso/parallel.hpp"

#include <omp.h>

#include <chrono>
#include <cmath>
#include <cstdint>
#include <exception>
#include <limits>
#include <vector>

#include "psso/core.hpp"
#include "psso/error.hpp"

namespace psso {

namespace {

struct BestCandidate {
  double fitness;
  std::int64_t index;
};

constexpr std::int64_t kNoIndex = std::numeric_limits<std::int64_t>::max();

// (fitness, index) lexicographic order: associative and commutative, so the
// combined result does not depend on how iterations were split across threads.
inline BestCandidate lexmin(const BestCandidate& a, const BestCandidate& b) noexcept {
  if (a.fitness < b.fitness) return a;
  if (b.fitness < a.fitness) return b;
  return a.index <= b.index ? a : b;
}

#pragma omp declare reduction(lexmin:BestCandidate : omp_out = lexmin(omp_out, omp_in)) \
    initializer(omp_priv = BestCandidate{std::numeric_limits<double>::infinity(), kNoIndex})

int checked_workers(int workers) {
  if (workers < 1) throw InvalidArgument("workers must be >= 1");
  return workers;
}

void init_positions(Swarm& swarm, const SsoParams& params, const RngStream& rng, int workers) {
  const auto n = static_cast<std::int64_t>(params.nsol);
  const std::size_t nvar = params.nvar;
#pragma omp parallel for num_threads(workers) schedule(static)
  for (std::int64_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < nvar; ++j) {
      swarm.sol(static_cast<std::size_t>(i), j) =
          rng.uniform_in(params.var_min, params.var_max, static_cast<std::uint32_t>(i),
                         static_cast<std::uint32_t>(j), 0, StreamTag::kInit);
    }
  }
}

// Same result as core's initialize(), computed with the phase kernels.
Swarm initialize_parallel(const SsoParams& params, const ObjectiveFn& f, const RngStream& rng,
                          int workers, LayoutMode layout) {
  Swarm swarm;
  swarm.sol = PositionMatrix(params.nsol, params.nvar, layout);
  init_positions(swarm, params, rng, workers);
  swarm.sol_f.assign(params.nsol, 0.0);
  evaluate_phase(swarm, f, workers);
  swarm.pbests = swarm.sol;
  swarm.p_f = swarm.sol_f;
  swarm.gbest.assign(params.nvar, 0.0);
  swarm.g_f = std::numeric_limits<double>::infinity();
  update_gbest_phase(swarm, workers);
  return swarm;
}

}  // namespace

void search_phase(Swarm& swarm, const SsoParams& params, const RngStream& rng,
                  std::uint32_t iter, int workers) {
  checked_workers(workers);
  const auto n = static_cast<std::int64_t>(swarm.nsol());
  const std::size_t nvar = swarm.nvar();
  const double cw = params.cw, cp = params.cp, cg = params.cg;
  const double lo = params.var_min, hi = params.var_max;
  PositionMatrix& sol = swarm.sol;
  const PositionMatrix& pbests = swarm.pbests;
  const std::vector<double>& gbest = swarm.gbest;

#pragma omp parallel for num_threads(workers) schedule(static)
  for (std::int64_t i = 0; i < n; ++i) {
    const auto row = static_cast<std::size_t>(i);
    const auto pi = static_cast<std::uint32_t>(i);
    for (std::size_t j = 0; j < nvar; ++j) {
      const auto vj = static_cast<std::uint32_t>(j);
      switch (classify_branch(rng.uniform(pi, vj, iter, StreamTag::kBranch), cw, cp, cg)) {
        case Branch::kKeep:
          break;
        case Branch::kPersonal:
          sol(row, j) = pbests(row, j);
          break;
        case Branch::kGlobal:
          sol(row, j) = gbest[j];
          break;
        case Branch::kFresh:
          sol(row, j) = rng.uniform_in(lo, hi, pi, vj, iter, StreamTag::kFresh);
          break;
      }
    }
  }
}

void evaluate_phase(Swarm& swarm, const ObjectiveFn& f, int workers, std::size_t iteration) {
  checked_workers(workers);
  const auto n = static_cast<std::int64_t>(swarm.nsol());
  const std::size_t nvar = swarm.nvar();
  const bool contiguous = swarm.layout() == LayoutMode::kParticleMajor;
  std::int64_t first_bad = n;
  std::exception_ptr failure;

#pragma omp parallel num_threads(workers)
  {
    std::vector<double> buffer(contiguous ? 0 : nvar);
#pragma omp for schedule(static) reduction(min : first_bad)
    for (std::int64_t i = 0; i < n; ++i) {
      const auto row = static_cast<std::size_t>(i);
      try {
        const double value = contiguous ? f(swarm.sol.row_span(row))
                                        : f(swarm.sol.gather_row(row, buffer));
        swarm.sol_f[row] = value;
        if (!std::isfinite(value) && i < first_bad) first_bad = i;
      } catch (...) {
#pragma omp critical(psso_evaluate_failure)
        if (!failure) failure = std::current_exception();
      }
    }
  }

  if (failure) std::rethrow_exception(failure);
  if (first_bad < n) {
    const auto row = static_cast<std::size_t>(first_bad);
    throw NonFiniteFitness(row, iteration, swarm.sol_f[row]);
  }
}

void update_pbests_phase(Swarm& swarm, int workers) {
  checked_workers(workers);
  const auto n = static_cast<std::int64_t>(swarm.nsol());
#pragma omp parallel for num_threads(workers) schedule(static)
  for (std::int64_t i = 0; i < n; ++i) {
    const auto row = static_cast<std::size_t>(i);
    if (swarm.sol_f[row] <= swarm.p_f[row]) {
      swarm.pbests.copy_row_from(row, swarm.sol, row);
      swarm.p_f[row] = swarm.sol_f[row];
    }
  }
}

void update_gbest_phase(Swarm& swarm, int workers) {
  checked_workers(workers);
  const auto n = static_cast<std::int64_t>(swarm.nsol());
  const std::vector<double>& p_f = swarm.p_f;
  BestCandidate best{std::numeric_limits<double>::infinity(), kNoIndex};

#pragma omp parallel for num_threads(workers) schedule(static) reduction(lexmin : best)
  for (std::int64_t i = 0; i < n; ++i) {
    best = lexmin(best, BestCandidate{p_f[static_cast<std::size_t>(i)], i});
  }

  if (best.index != kNoIndex && best.fitness <= swarm.g_f) {
    swarm.pbests.gather_row(static_cast<std::size_t>(best.index), swarm.gbest);
    swarm.g_f = best.fitness;
  }
}

RunRecord run_parallel(const SsoParams& params, const ObjectiveFn& f, std::uint64_t seed,
                       const ParallelOptions& options) {
  params.validate();
  const int workers = checked_workers(options.workers);
  RngStream rng(seed);
  rng.attach_counter(options.draw_counter);

  RunRecord record;
  record.schedule = ScheduleKind::kParallelSync;
  record.params = params;
  record.seed = seed;

  std::vector<double> trajectory;
  if (options.record_trajectory) trajectory.reserve(params.niter);

  const auto start = std::chrono::steady_clock::now();
  Swarm swarm = initialize_parallel(params, f, rng, workers, options.layout);
  for (std::size_t t = 0; t < params.niter; ++t) {
    search_phase(swarm, params, rng, static_cast<std::uint32_t>(t), workers);
    evaluate_phase(swarm, f, workers, t);
    update_pbests_phase(swarm, workers);
    update_gbest_phase(swarm, workers);
    if (options.record_trajectory) trajectory.push_back(swarm.g_f);
  }
  const auto stop = std::chrono::steady_clock::now();

  record.best_fitness = swarm.g_f;
  record.best_position = std::move(swarm.gbest);
  record.wall_time_s =
      to_microsecond_resolution(std::chrono::duration<double>(stop - start).count());
  if (options.record_trajectory) record.trajectory = std::move(trajectory);
  return record;
}

RunRecord run_schedule(const Schedule& schedule, const SsoParams& params, const ObjectiveFn& f,
                       std::uint64_t seed, LayoutMode layout, bool record_trajectory) {
  if (schedule.kind == ScheduleKind::kSequentialAsync) {
    return run_sequential(params, f, seed, {.record_trajectory = record_trajectory});
  }
  return run_parallel(params, f, seed,
                      {.workers = schedule.workers,
                       .layout = layout,
                       .record_trajectory = record_trajectory});
}

}  // namespace psso
