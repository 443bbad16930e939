#pragma once

#include <iosfwd>
#include <string_view>

#include "psso/experiment.hpp"
#include "psso/speedup.hpp"

namespace psso {

enum class PlotKind { kTrajectory, kPrecisionBox, kSpeedupCurve };

PlotKind parse_plot_kind(std::string_view text);
std::string_view to_string(PlotKind kind) noexcept;

/// Whitespace-separated columns with a '#' header describing the schema.
/// trajectory: one row per (run, iteration), second column g_f.
/// precision-box: one row per record.
/// speedup-curve: one row per nsol; sequential runs are A, parallel runs are B.
/// Throws InvalidArgument when trajectories are missing for kTrajectory.
void emit_plot_data(std::ostream& os, const ExperimentReport& report, PlotKind kind,
                    double power_a = kDefaultPowerA, double power_b = kDefaultPowerB);

}  // namespace psso
