#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "psso/benchmarks.hpp"
#include "psso/experiment.hpp"
#include "psso/objective.hpp"
#include "psso/stats.hpp"

namespace psso {

struct Thresholds {
  double cw = 0.0;
  double cp = 0.0;
  double cg = 0.0;
  friend bool operator==(const Thresholds&, const Thresholds&) = default;
};

/// The six search-parameter combinations studied for the sphere function.
inline constexpr std::array<Thresholds, 6> kBuiltinTriples{{
    {0.1, 0.3, 0.7},
    {0.1, 0.4, 0.8},
    {0.2, 0.4, 0.6},
    {0.2, 0.5, 0.9},
    {0.3, 0.4, 0.5},
    {0.3, 0.6, 0.8},
}};

/// One "cw,cp,cg" per line; '#' comments and blank lines ignored.
std::vector<Thresholds> read_triples(std::istream& is);

struct SweepConfig {
  bench::FunctionId function = bench::FunctionId::kF1;
  std::vector<Thresholds> triples{kBuiltinTriples.begin(), kBuiltinTriples.end()};
  int runs = 20;
  ScheduleKind schedule = ScheduleKind::kParallelSync;
  SsoParams base;  ///< thresholds overwritten per combination
  std::uint64_t base_seed = 1;
  int workers = 1;
  bool strict = false;
  /// Replaces the benchmark when set (synthetic objectives in tests).
  ObjectiveFn objective_override;
};

struct SweepGroup {
  Thresholds triple;
  CellSummary summary;
  double rank_sum = 0.0;
  double mean_rank = 0.0;
};

struct SweepReport {
  std::vector<SweepGroup> groups;
  std::vector<RunRecord> records;
  /// Absent when fewer than two combinations were run.
  std::optional<stats::TestResult> kruskal;
  std::vector<std::string> diagnostics;
};

/// Validates every triple before any run starts.
SweepReport parameter_sweep(const SweepConfig& config);

}  // namespace psso
