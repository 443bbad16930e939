#include "psso/core.hpp"

#include <chrono>
#include <cmath>
#include <limits>
#include <sstream>
#include <vector>

#include "psso/error.hpp"

namespace psso {

double step_update_variable(double x, double p, double g, double u, double fresh,
                            const SsoParams& params) {
  if (!(u >= 0.0 && u < 1.0)) {
    std::ostringstream msg;
    msg << "step_update_variable: deviate " << u << " outside [0, 1)";
    throw InvalidArgument(msg.str());
  }
  switch (classify_branch(u, params.cw, params.cp, params.cg)) {
    case Branch::kKeep:
      return x;
    case Branch::kPersonal:
      return p;
    case Branch::kGlobal:
      return g;
    case Branch::kFresh:
      break;
  }
  return fresh;
}

Swarm initialize(const SsoParams& params, const ObjectiveFn& f, const RngStream& rng,
                 LayoutMode layout) {
  params.validate();
  Swarm swarm;
  swarm.sol = PositionMatrix(params.nsol, params.nvar, layout);
  for (std::size_t i = 0; i < params.nsol; ++i) {
    for (std::size_t j = 0; j < params.nvar; ++j) {
      swarm.sol(i, j) = rng.uniform_in(params.var_min, params.var_max, static_cast<std::uint32_t>(i),
                                       static_cast<std::uint32_t>(j), 0, StreamTag::kInit);
    }
  }
  swarm.pbests = swarm.sol;
  swarm.sol_f.resize(params.nsol);
  std::vector<double> row(params.nvar);
  for (std::size_t i = 0; i < params.nsol; ++i) {
    const double value = f(swarm.sol.gather_row(i, row));
    if (!std::isfinite(value)) throw NonFiniteFitness(i, NonFiniteFitness::kNoIteration, value);
    swarm.sol_f[i] = value;
  }
  swarm.p_f = swarm.sol_f;
  std::size_t best = 0;
  for (std::size_t i = 1; i < params.nsol; ++i) {
    if (swarm.p_f[i] < swarm.p_f[best]) best = i;
  }
  swarm.gbest = swarm.pbests.row_vector(best);
  swarm.g_f = swarm.p_f[best];
  return swarm;
}

void sequential_iteration(Swarm& swarm, const SsoParams& params, const ObjectiveFn& f,
                          const RngStream& rng, std::uint32_t iter) {
  const std::size_t nvar = swarm.nvar();
  std::vector<double> row(nvar);
  for (std::size_t i = 0; i < swarm.nsol(); ++i) {
    const auto pi = static_cast<std::uint32_t>(i);
    for (std::size_t j = 0; j < nvar; ++j) {
      const auto vj = static_cast<std::uint32_t>(j);
      const double u = rng.uniform(pi, vj, iter, StreamTag::kBranch);
      switch (classify_branch(u, params.cw, params.cp, params.cg)) {
        case Branch::kKeep:
          break;
        case Branch::kPersonal:
          swarm.sol(i, j) = swarm.pbests(i, j);
          break;
        case Branch::kGlobal:
          swarm.sol(i, j) = swarm.gbest[j];
          break;
        case Branch::kFresh:
          swarm.sol(i, j) =
              rng.uniform_in(params.var_min, params.var_max, pi, vj, iter, StreamTag::kFresh);
          break;
      }
    }

    const double value = f(swarm.sol.gather_row(i, row));
    if (!std::isfinite(value)) throw NonFiniteFitness(i, iter, value);
    swarm.sol_f[i] = value;

    if (swarm.sol_f[i] <= swarm.p_f[i]) {
      swarm.pbests.copy_row_from(i, swarm.sol, i);
      swarm.p_f[i] = swarm.sol_f[i];
      if (swarm.p_f[i] <= swarm.g_f) {
        swarm.pbests.gather_row(i, swarm.gbest);
        swarm.g_f = swarm.p_f[i];
      }
    }
  }
}

RunRecord run_sequential(const SsoParams& params, const ObjectiveFn& f, std::uint64_t seed,
                         const SequentialOptions& options) {
  params.validate();
  RngStream rng(seed);
  rng.attach_counter(options.draw_counter);

  RunRecord record;
  record.schedule = ScheduleKind::kSequentialAsync;
  record.params = params;
  record.seed = seed;

  std::vector<double> trajectory;
  if (options.record_trajectory) trajectory.reserve(params.niter);

  const auto start = std::chrono::steady_clock::now();
  Swarm swarm = initialize(params, f, rng);
  for (std::size_t t = 0; t < params.niter; ++t) {
    sequential_iteration(swarm, params, f, rng, static_cast<std::uint32_t>(t));
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

}  // namespace psso
