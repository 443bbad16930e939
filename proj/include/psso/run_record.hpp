#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "psso/params.hpp"

namespace psso {

enum class ScheduleKind {
  kSequentialAsync,  ///< per-particle search/evaluate/update; gBest visible immediately
  kParallelSync,     ///< phased: search all, barrier, evaluate all, barrier, update
};

/// CSV/CLI token: "sequential" or "parallel".
std::string_view to_string(ScheduleKind kind) noexcept;
ScheduleKind parse_schedule(std::string_view text);

/// Outcome of one optimization run.
struct RunRecord {
  std::int64_t run_id = 0;
  ScheduleKind schedule = ScheduleKind::kSequentialAsync;
  std::string function;
  SsoParams params;
  std::uint64_t seed = 0;
  double best_fitness = 0.0;
  std::vector<double> best_position;
  /// Seconds, rounded to whole microseconds.
  double wall_time_s = 0.0;
  /// g_f after each iteration, if recorded.
  std::optional<std::vector<double>> trajectory;

  friend bool operator==(const RunRecord&, const RunRecord&) = default;
};

/// Rounds a duration in seconds to microsecond resolution, never below 1 us.
double to_microsecond_resolution(double seconds) noexcept;

}  // namespace psso
