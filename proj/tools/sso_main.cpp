#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"

namespace {
const CLI::Range kAtLeastOne(1.0, 1e18, "POSITIVE_INT");
}  // namespace

int main(int argc, char** argv) {
  using namespace psso::cli;

  CLI::App app{"Simplified swarm optimization: sequential and phase-parallel engines"};
  app.set_config("--config", "", "TOML/INI file with the same keys as the flags; flags win");
  app.require_subcommand(1);

  RunOptions run;
  auto* run_cmd = app.add_subcommand("run", "Repeated independent runs on benchmark functions");
  run_cmd->add_option("--function", run.functions, "f1..f9 or 'all' (repeatable)")
      ->delimiter(',');
  run_cmd->add_option("--schedule", run.schedule, "sequential|parallel|both")
      ->check(CLI::IsMember({"sequential", "parallel", "both"}));
  run_cmd->add_option("--workers", run.workers, "Worker threads for the parallel schedule")
      ->check(kAtLeastOne);
  run_cmd->add_option("--nsol", run.nsol, "Population size")->check(kAtLeastOne);
  run_cmd->add_option("--nvar", run.nvar, "Dimension")->check(kAtLeastOne);
  run_cmd->add_option("--iters", run.iters, "Iterations per run")->check(kAtLeastOne);
  run_cmd->add_option("--cw", run.cw);
  run_cmd->add_option("--cp", run.cp);
  run_cmd->add_option("--cg", run.cg);
  run_cmd->add_option("--seed", run.seed, "Base seed; run r uses seed + r");
  run_cmd->add_option("--runs", run.runs, "Replications per cell")->check(kAtLeastOne);
  run_cmd->add_option("--layout", run.layout, "particle-major|interleaved")
      ->check(CLI::IsMember({"particle-major", "interleaved"}));
  run_cmd->add_option("--out", run.out, "Runs CSV path");
  run_cmd->add_flag("--trajectory", run.trajectory, "Record per-iteration g_f");
  run_cmd->add_flag("--strict", run.strict, "Reject f8 dimensions not divisible by 4");
  run_cmd->add_flag("--parallel-cells", run.parallel_cells,
                    "Run cells concurrently (timings become contended)");
  run_cmd->add_option("--block-size", run.block_size, "Recorded for provenance only");

  SweepOptions sweep;
  auto* sweep_cmd = app.add_subcommand("sweep", "Threshold sweep with a Kruskal-Wallis test");
  sweep_cmd->add_option("--function", sweep.function);
  sweep_cmd->add_option("--triples", sweep.triples, "File of cw,cp,cg lines or builtin-table-3.4");
  sweep_cmd->add_option("--runs", sweep.runs)->check(kAtLeastOne);
  sweep_cmd->add_option("--out", sweep.out, "Runs CSV path");
  sweep_cmd->add_option("--schedule", sweep.schedule)
      ->check(CLI::IsMember({"sequential", "parallel"}));
  sweep_cmd->add_option("--workers", sweep.workers)->check(kAtLeastOne);
  sweep_cmd->add_option("--nsol", sweep.nsol)->check(kAtLeastOne);
  sweep_cmd->add_option("--nvar", sweep.nvar)->check(kAtLeastOne);
  sweep_cmd->add_option("--iters", sweep.iters)->check(kAtLeastOne);
  sweep_cmd->add_option("--seed", sweep.seed);
  sweep_cmd->add_flag("--strict", sweep.strict);

  CompareOptions compare;
  auto* compare_cmd =
      app.add_subcommand("compare", "Speedup, rectified efficiency and Friedman precision test");
  compare_cmd->add_option("input_a", compare.input_a, "Runs CSV of implementation A")
      ->required()
      ->check(CLI::ExistingFile);
  compare_cmd->add_option("input_b", compare.input_b, "Runs CSV of implementation B")
      ->required()
      ->check(CLI::ExistingFile);
  compare_cmd->add_option("--power-a", compare.power_a, "Watts")->check(kAtLeastOne);
  compare_cmd->add_option("--power-b", compare.power_b, "Watts")->check(kAtLeastOne);
  compare_cmd->add_flag("--strict", compare.strict, "Degenerate statistics exit with code 3");

  StatsOptions stats;
  auto* stats_cmd = app.add_subcommand("stats", "Hypothesis tests over a runs CSV");
  stats_cmd->add_option("--input", stats.input)->required()->check(CLI::ExistingFile);
  stats_cmd->add_option("--test", stats.test)
      ->check(CLI::IsMember({"kruskal", "friedman", "bartlett", "levene", "ttest", "normality"}));
  stats_cmd->add_option("--group-by", stats.group_by, "CSV column defining the groups");
  stats_cmd->add_option("--value", stats.value, "best_fitness or wall_time_s")
      ->check(CLI::IsMember({"best_fitness", "wall_time_s"}));
  stats_cmd->add_flag("--strict", stats.strict, "Degenerate statistics exit with code 3");

  PlotOptions plot;
  auto* plot_cmd = app.add_subcommand("plot-data", "Columnar text for external plotting");
  plot_cmd->add_option("--input", plot.input, "Runs CSV")->required()->check(CLI::ExistingFile);
  plot_cmd->add_option("--kind", plot.kind)
      ->check(CLI::IsMember({"trajectory", "precision-box", "speedup-curve"}));
  plot_cmd->add_option("--out", plot.out, "Output file (default stdout)");
  plot_cmd->add_option("--power-a", plot.power_a)->check(kAtLeastOne);
  plot_cmd->add_option("--power-b", plot.power_b)->check(kAtLeastOne);

  std::size_t dimension = 50;
  bool functions_strict = false;
  bool ledger = false;
  auto* functions_cmd =
      app.add_subcommand("functions", "List the benchmark suite and its deviation ledger");
  functions_cmd->add_option("--dimension", dimension)->check(kAtLeastOne);
  functions_cmd->add_flag("--ledger", ledger, "Print the deviation ledger as JSON");
  functions_cmd->add_flag("--strict", functions_strict, "Fail if f8 cannot use the dimension");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  if (*run_cmd) return run_command(run, std::cout, std::cerr);
  if (*sweep_cmd) return sweep_command(sweep, std::cout, std::cerr);
  if (*compare_cmd) return compare_command(compare, std::cout, std::cerr);
  if (*stats_cmd) return stats_command(stats, std::cout, std::cerr);
  if (*plot_cmd) return plot_command(plot, std::cout, std::cerr);
  if (*functions_cmd) return functions_command(dimension, ledger, functions_strict, std::cout, std::cerr);
  return kUsage;
}
