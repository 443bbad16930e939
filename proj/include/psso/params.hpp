#pragma once

#include <cstddef>
#include <string>

namespace psso {

/// Algorithm constants for one SSO/PSSO run.
///
/// cw <= cp <= cg are cumulative thresholds partitioning [0, 1) into the
/// four update branches: keep the current value, copy the personal best,
/// copy the global best, or draw a fresh value from [var_min, var_max).
struct SsoParams {
  double cw = 0.3;
  double cp = 0.6;
  double cg = 0.8;
  double var_min = -5.12;
  double var_max = 5.12;
  std::size_t nsol = 100;
  std::size_t nvar = 50;
  std::size_t niter = 1000;

  /// Throws InvalidArgument naming the first violated constraint.
  void validate() const;

  friend bool operator==(const SsoParams&, const SsoParams&) = default;
};

/// Returns an empty string if the thresholds are well-formed, otherwise a
/// description of the problem.
std::string check_thresholds(double cw, double cp, double cg);

}  // namespace psso
