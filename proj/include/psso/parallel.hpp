#pragma once

#include <cstddef>
#include <cstdint>

#include "psso/error.hpp"
#include "psso/objective.hpp"
#include "psso/params.hpp"
#include "psso/rng.hpp"
#include "psso/run_record.hpp"
#include "psso/swarm.hpp"

namespace psso {

/// Execution schedule requested by a caller.
struct Schedule {
  ScheduleKind kind = ScheduleKind::kParallelSync;
  /// Worker threads; only meaningful for kParallelSync.
  int workers = 1;
};

// Phase kernels of the synchronous engine. Each one is an OpenMP parallel
// loop over particles with `workers` threads and ends at an implicit barrier.
// Workers own disjoint particle ranges, so the results never depend on the
// worker count.

/// Every sol(i, j) replaced through the step function, reading pbests and
/// gbest as they were on entry. Randomness is keyed by (seed, i, j, iter).
void search_phase(Swarm& swarm, const SsoParams& params, const RngStream& rng,
                  std::uint32_t iter, int workers = 1);

/// sol_f[i] = f(sol row i). Throws NonFiniteFitness for the lowest failing
/// particle index.
void evaluate_phase(Swarm& swarm, const ObjectiveFn& f, int workers = 1,
                    std::size_t iteration = NonFiniteFitness::kNoIteration);

/// Row-wise: if sol_f[i] <= p_f[i], pbests row i takes sol row i.
void update_pbests_phase(Swarm& swarm, int workers = 1);

/// Deterministic (fitness, index) min-reduction over p_f; gbest takes the
/// winning row when its fitness is <= g_f.
void update_gbest_phase(Swarm& swarm, int workers = 1);

struct ParallelOptions {
  int workers = 1;
  LayoutMode layout = LayoutMode::kParticleMajor;
  bool record_trajectory = true;
  DrawCounter* draw_counter = nullptr;
};

/// PSSO: initialize, then niter rounds of search -> evaluate -> pBest -> gBest
/// with a barrier between phases. Output (excluding wall time) is a pure
/// function of (params, f, seed); worker count and layout do not affect it.
RunRecord run_parallel(const SsoParams& params, const ObjectiveFn& f, std::uint64_t seed,
                       const ParallelOptions& options = {});

/// Dispatch on schedule kind.
RunRecord run_schedule(const Schedule& schedule, const SsoParams& params, const ObjectiveFn& f,
                       std::uint64_t seed, LayoutMode layout = LayoutMode::kParticleMajor,
                       bool record_trajectory = true);

}  // namespace psso
