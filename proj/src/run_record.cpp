#include "psso/run_record.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "psso/error.hpp"

namespace psso {

std::string_view to_string(ScheduleKind kind) noexcept {
  return kind == ScheduleKind::kSequentialAsync ? "sequential" : "parallel";
}

ScheduleKind parse_schedule(std::string_view text) {
  if (text == "sequential") return ScheduleKind::kSequentialAsync;
  if (text == "parallel") return ScheduleKind::kParallelSync;
  throw InvalidArgument("unknown schedule '" + std::string(text) +
                        "' (expected sequential or parallel)");
}

double to_microsecond_resolution(double seconds) noexcept {
  const double micros = std::max(1.0, std::round(seconds * 1e6));
  return micros / 1e6;
}

}  // namespace psso
