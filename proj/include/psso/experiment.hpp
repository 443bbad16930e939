#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "psso/benchmarks.hpp"
#include "psso/params.hpp"
#include "psso/run_record.hpp"
#include "psso/swarm.hpp"

namespace psso {

/// Exact header of the per-run CSV.
inline constexpr std::string_view kRunsCsvHeader =
    "run_id,schedule,function,nsol,nvar,niter,cw,cp,cg,seed,best_fitness,wall_time_s";

struct ExperimentConfig {
  std::vector<bench::FunctionId> functions{bench::FunctionId::kF1};
  std::vector<ScheduleKind> schedules{ScheduleKind::kSequentialAsync,
                                      ScheduleKind::kParallelSync};
  SsoParams params;
  int runs = 20;
  std::uint64_t base_seed = 1;
  int workers = 1;
  LayoutMode layout = LayoutMode::kParticleMajor;
  /// Recorded for provenance only; no effect on CPU.
  int block_size = 1024;
  bool record_trajectory = false;
  /// Require f8 dimensions divisible by 4.
  bool strict = false;
  /// Run (function, schedule) cells concurrently. Timings become contended.
  bool parallel_cells = false;
  std::optional<std::filesystem::path> out;
  /// Replaces every benchmark's objective when set; bounds still come from the benchmark.
  ObjectiveFn objective_override;

  /// Throws InvalidArgument naming the offending key.
  void validate() const;
};

/// Avg/Std/Min over the runs of one (function, schedule) cell.
struct CellSummary {
  std::string function;
  ScheduleKind schedule = ScheduleKind::kSequentialAsync;
  std::size_t count = 0;
  double mean = 0.0;
  /// Sample standard deviation; absent for a single run.
  std::optional<double> std;
  double min = 0.0;
  double mean_time_s = 0.0;
};

struct ExperimentReport {
  std::vector<RunRecord> records;
  std::vector<CellSummary> summaries;
  std::vector<std::string> warnings;
  bool failed = false;
  std::string failure;
  int block_size = 1024;
};

/// Runs `runs` replications per (function, schedule), seeds base_seed + run_id.
/// If `out` is set, writes the runs CSV, `<stem>_summary.csv` and, when
/// trajectories are recorded, `<stem>_trajectory.csv`. A failing run stops
/// the experiment; records so far are kept and the report is marked failed.
ExperimentReport run_experiment(const ExperimentConfig& config);

/// Mean/std/min per (function, schedule) in first-seen order.
std::vector<CellSummary> summarize(const std::vector<RunRecord>& records);

void write_runs_csv(std::ostream& os, const std::vector<RunRecord>& records,
                    const std::optional<std::string>& failure = std::nullopt);
void write_runs_csv(const std::filesystem::path& path, const std::vector<RunRecord>& records,
                    const std::optional<std::string>& failure = std::nullopt);

struct RunsCsv {
  std::vector<RunRecord> records;
  /// Set if the file carries a failure marker.
  std::optional<std::string> failure;
};

/// Throws Error on a malformed header or row.
RunsCsv read_runs_csv(std::istream& is);
RunsCsv read_runs_csv(const std::filesystem::path& path);

void write_summary_csv(std::ostream& os, const std::vector<CellSummary>& summaries);

/// Columns run_id,schedule,function,iteration,g_f.
void write_trajectory_csv(std::ostream& os, const std::vector<RunRecord>& records);
/// Attaches trajectories from a trajectory CSV to matching (run_id, schedule, function) records.
void read_trajectory_csv(std::istream& is, std::vector<RunRecord>& records);

std::filesystem::path sibling_path(const std::filesystem::path& out, std::string_view suffix);

}  // namespace psso
