#pragma once

#include <cstdint>

#include "psso/objective.hpp"
#include "psso/params.hpp"
#include "psso/rng.hpp"
#include "psso/run_record.hpp"
#include "psso/swarm.hpp"

namespace psso {

/// The four outcomes of the SSO step function.
enum class Branch { kKeep, kPersonal, kGlobal, kFresh };

/// Branch chosen by deviate u: [0,cw) keep, [cw,cp) pBest, [cp,cg) gBest, [cg,1) fresh.
/// No range check on u.
constexpr Branch classify_branch(double u, double cw, double cp, double cg) noexcept {
  if (u < cw) return Branch::kKeep;
  if (u < cp) return Branch::kPersonal;
  if (u < cg) return Branch::kGlobal;
  return Branch::kFresh;
}

/// SSO step function for one variable. Throws InvalidArgument if u is not in [0, 1).
double step_update_variable(double x, double p, double g, double u, double fresh,
                            const SsoParams& params);

/// Uniform random population; pbests = sol, gBest = best row (lowest index on ties).
/// Throws NonFiniteFitness naming the particle if f is not finite at a start point.
Swarm initialize(const SsoParams& params, const ObjectiveFn& f, const RngStream& rng,
                 LayoutMode layout = LayoutMode::kParticleMajor);

struct SequentialOptions {
  bool record_trajectory = true;
  /// Optional draw tally, see RngStream::attach_counter.
  DrawCounter* draw_counter = nullptr;
};

/// Serial SSO reference. Particles are processed in index order and each one
/// runs search, evaluation, pBest update and gBest update before the next
/// particle starts, so later particles see gBest improvements made earlier in
/// the same iteration.
RunRecord run_sequential(const SsoParams& params, const ObjectiveFn& f, std::uint64_t seed,
                         const SequentialOptions& options = {});

/// One iteration of the sequential schedule applied in place. Exposed for tests.
void sequential_iteration(Swarm& swarm, const SsoParams& params, const ObjectiveFn& f,
                          const RngStream& rng, std::uint32_t iter);

}  // namespace psso
