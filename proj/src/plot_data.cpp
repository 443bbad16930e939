#include "psso/plot_data.hpp"

#include <cstdio>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "psso/error.hpp"

namespace psso {

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

}  // namespace

PlotKind parse_plot_kind(std::string_view text) {
  if (text == "trajectory") return PlotKind::kTrajectory;
  if (text == "precision-box") return PlotKind::kPrecisionBox;
  if (text == "speedup-curve") return PlotKind::kSpeedupCurve;
  throw InvalidArgument("unknown plot kind '" + std::string(text) +
                        "' (expected trajectory, precision-box or speedup-curve)");
}

std::string_view to_string(PlotKind kind) noexcept {
  switch (kind) {
    case PlotKind::kTrajectory:
      return "trajectory";
    case PlotKind::kPrecisionBox:
      return "precision-box";
    case PlotKind::kSpeedupCurve:
      return "speedup-curve";
  }
  return "unknown";
}

void emit_plot_data(std::ostream& os, const ExperimentReport& report, PlotKind kind,
                    double power_a, double power_b) {
  switch (kind) {
    case PlotKind::kTrajectory: {
      bool any = false;
      for (const auto& r : report.records) any = any || r.trajectory.has_value();
      if (!any) throw InvalidArgument("trajectory plot data needs recorded trajectories");
      os << "# kind: trajectory\n"
            "# columns: iteration g_f run_id schedule function\n"
            "# g_f is the global-best fitness after the iteration; non-increasing per run\n";
      for (const auto& r : report.records) {
        if (!r.trajectory) continue;
        for (std::size_t t = 0; t < r.trajectory->size(); ++t) {
          os << t << ' ' << fmt((*r.trajectory)[t]) << ' ' << r.run_id << ' '
             << to_string(r.schedule) << ' ' << r.function << '\n';
        }
      }
      return;
    }
    case PlotKind::kPrecisionBox:
      os << "# kind: precision-box\n"
            "# columns: schedule function run_id best_fitness\n";
      for (const auto& r : report.records) {
        os << to_string(r.schedule) << ' ' << r.function << ' ' << r.run_id << ' '
           << fmt(r.best_fitness) << '\n';
      }
      return;
    case PlotKind::kSpeedupCurve: {
      std::map<std::size_t, std::pair<std::vector<double>, std::vector<double>>> by_nsol;
      for (const auto& r : report.records) {
        auto& [seq, par] = by_nsol[r.params.nsol];
        (r.schedule == ScheduleKind::kSequentialAsync ? seq : par).push_back(r.wall_time_s);
      }
      os << "# kind: speedup-curve\n"
            "# A = sequential schedule, B = parallel schedule\n"
            "# power_a " << fmt(power_a) << " W, power_b " << fmt(power_b) << " W\n"
            "# columns: nsol mean_time_a mean_time_b speedup power_ratio rectified_efficiency\n";
      for (const auto& [nsol, times] : by_nsol) {
        if (times.first.empty() || times.second.empty()) continue;
        const auto s = compute_speedup(times.first, times.second, power_a, power_b, nsol);
        os << nsol << ' ' << fmt(s.mean_time_a) << ' ' << fmt(s.mean_time_b) << ' '
           << fmt(s.speedup) << ' ' << fmt(s.power_ratio) << ' ' << fmt(s.rectified_efficiency)
           << '\n';
      }
      return;
    }
  }
}

}  // namespace psso
