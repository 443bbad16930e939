#pragma once

#include <span>

namespace psso {

/// Wall-clock comparison of implementation A against B, scaled by device power.
struct SpeedupReport {
  std::size_t nsol = 0;
  double mean_time_a = 0.0;
  double mean_time_b = 0.0;
  double speedup = 0.0;
  double power_a = 0.0;
  double power_b = 0.0;
  double power_ratio = 0.0;
  double rectified_efficiency = 0.0;
};

inline constexpr double kDefaultPowerA = 84.0;
inline constexpr double kDefaultPowerB = 180.0;

/// speedup = mean(a) / mean(b); power_ratio = power_b / power_a;
/// rectified_efficiency = speedup / power_ratio.
/// Throws InvalidArgument for empty samples, non-positive times or powers.
SpeedupReport compute_speedup(std::span<const double> times_a, std::span<const double> times_b,
                              double power_a = kDefaultPowerA, double power_b = kDefaultPowerB,
                              std::size_t nsol = 0);

}  // namespace psso
