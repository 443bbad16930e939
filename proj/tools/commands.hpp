#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace psso::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kRuntime = 2,
  kDegenerate = 3,
};

struct RunOptions {
  std::vector<std::string> functions{"f1"};
  std::string schedule = "both";
  int workers = 1;
  std::size_t nsol = 100;
  std::size_t nvar = 50;
  std::size_t iters = 1000;
  double cw = 0.3;
  double cp = 0.6;
  double cg = 0.8;
  std::uint64_t seed = 1;
  int runs = 20;
  std::string layout = "particle-major";
  std::string out;
  bool trajectory = false;
  bool strict = false;
  bool parallel_cells = false;
  int block_size = 1024;
};

struct SweepOptions {
  std::string function = "f1";
  std::string triples = "builtin-table-3.4";
  int runs = 20;
  std::string out;
  std::string schedule = "parallel";
  int workers = 1;
  std::size_t nsol = 100;
  std::size_t nvar = 50;
  std::size_t iters = 1000;
  std::uint64_t seed = 1;
  bool strict = false;
};

struct CompareOptions {
  std::string input_a;
  std::string input_b;
  double power_a = 84.0;
  double power_b = 180.0;
  bool strict = false;
};

struct StatsOptions {
  std::string input;
  std::string test = "kruskal";
  std::string group_by = "schedule";
  std::string value = "best_fitness";
  bool strict = false;
};

struct PlotOptions {
  std::string input;
  std::string kind = "precision-box";
  std::string out;
  double power_a = 84.0;
  double power_b = 180.0;
};

int run_command(const RunOptions& options, std::ostream& out, std::ostream& err);
int sweep_command(const SweepOptions& options, std::ostream& out, std::ostream& err);
int compare_command(const CompareOptions& options, std::ostream& out, std::ostream& err);
int stats_command(const StatsOptions& options, std::ostream& out, std::ostream& err);
int plot_command(const PlotOptions& options, std::ostream& out, std::ostream& err);
int functions_command(std::size_t dimension, bool ledger, bool strict, std::ostream& out, std::ostream& err);

}  // namespace psso::cli
