#include "psso/speedup.hpp"

#include <cmath>
#include <numeric>

#include "psso/error.hpp"

namespace psso {

namespace {

double checked_mean(std::span<const double> times, const char* label) {
  if (times.empty()) throw InvalidArgument(std::string("compute_speedup: ") + label + " is empty");
  for (double t : times) {
    if (!(t > 0.0) || !std::isfinite(t)) {
      throw InvalidArgument(std::string("compute_speedup: ") + label +
                            " contains a non-positive time");
    }
  }
  return std::accumulate(times.begin(), times.end(), 0.0) / static_cast<double>(times.size());
}

}  // namespace

SpeedupReport compute_speedup(std::span<const double> times_a, std::span<const double> times_b,
                              double power_a, double power_b, std::size_t nsol) {
  if (!(power_a > 0.0) || !(power_b > 0.0)) {
    throw InvalidArgument("compute_speedup: powers must be positive");
  }
  SpeedupReport r;
  r.nsol = nsol;
  r.mean_time_a = checked_mean(times_a, "times_a");
  r.mean_time_b = checked_mean(times_b, "times_b");
  r.power_a = power_a;
  r.power_b = power_b;
  r.speedup = r.mean_time_a / r.mean_time_b;
  r.power_ratio = power_b / power_a;
  r.rectified_efficiency = r.speedup / r.power_ratio;
  return r;
}

}  // namespace psso
