#include "commands.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <set>

#include "psso/benchmarks.hpp"
#include "psso/error.hpp"
#include "psso/experiment.hpp"
#include "psso/plot_data.hpp"
#include "psso/speedup.hpp"
#include "psso/stats.hpp"
#include "psso/sweep.hpp"

namespace psso::cli {

namespace {

std::string fmt(double v, const char* spec = "%.4f") {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

void print_test(std::ostream& out, const stats::TestResult& r, std::string_view label = {}) {
  out << "test=" << stats::to_string(r.method);
  if (!label.empty()) out << " group=" << label;
  out << " statistic=" << fmt(r.statistic, "%.10g") << " p_value=" << fmt(r.p_value, "%.6g")
      << " df=" << fmt(r.df.df1, "%g");
  if (r.df.df2 > 0.0) out << "," << fmt(r.df.df2, "%g");
  if (r.degenerate) out << " degenerate=1";
  if (!r.note.empty()) out << " note=\"" << r.note << "\"";
  out << '\n';
}

void print_summaries(std::ostream& out, const std::vector<CellSummary>& summaries) {
  out << "function schedule    runs         Avg.         Std.         Min.   time_s\n";
  for (const auto& s : summaries) {
    char line[160];
    std::snprintf(line, sizeof line, "%-8s %-10s %5zu %12.4f %12s %12.4f %8.4f\n",
                  s.function.c_str(), std::string(to_string(s.schedule)).c_str(), s.count, s.mean,
                  s.std ? fmt(*s.std).c_str() : "-", s.min, s.mean_time_s);
    out << line;
  }
}

std::vector<bench::FunctionId> parse_functions(const std::vector<std::string>& tokens) {
  std::vector<bench::FunctionId> ids;
  for (const auto& token : tokens) {
    if (token == "all") {
      for (int i = 1; i <= 9; ++i) ids.push_back(static_cast<bench::FunctionId>(i));
    } else {
      ids.push_back(bench::parse_function_id(token));
    }
  }
  return ids;
}

std::string column_value(const RunRecord& r, const std::string& column) {
  if (column == "run_id") return std::to_string(r.run_id);
  if (column == "schedule") return std::string(to_string(r.schedule));
  if (column == "function") return r.function;
  if (column == "nsol") return std::to_string(r.params.nsol);
  if (column == "nvar") return std::to_string(r.params.nvar);
  if (column == "niter") return std::to_string(r.params.niter);
  if (column == "cw") return fmt(r.params.cw, "%.17g");
  if (column == "cp") return fmt(r.params.cp, "%.17g");
  if (column == "cg") return fmt(r.params.cg, "%.17g");
  if (column == "seed") return std::to_string(r.seed);
  throw InvalidArgument("cannot group by column '" + column + "'");
}

// Wraps a command body so library exceptions map onto exit codes.
template <typename Body>
int guarded(std::ostream& err, Body&& body) {
  try {
    return body();
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kRuntime;
  }
}

}  // namespace

int run_command(const RunOptions& o, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    ExperimentConfig config;
    config.functions = parse_functions(o.functions);
    if (o.schedule == "both") {
      config.schedules = {ScheduleKind::kSequentialAsync, ScheduleKind::kParallelSync};
    } else {
      config.schedules = {parse_schedule(o.schedule)};
    }
    config.params.nsol = o.nsol;
    config.params.nvar = o.nvar;
    config.params.niter = o.iters;
    config.params.cw = o.cw;
    config.params.cp = o.cp;
    config.params.cg = o.cg;
    config.runs = o.runs;
    config.base_seed = o.seed;
    config.workers = o.workers;
    config.layout = parse_layout(o.layout);
    config.block_size = o.block_size;
    config.record_trajectory = o.trajectory;
    config.strict = o.strict;
    config.parallel_cells = o.parallel_cells;
    if (!o.out.empty()) config.out = o.out;

    const auto report = run_experiment(config);
    for (const auto& w : report.warnings) err << "warning: " << w << '\n';
    out << "# block_size=" << report.block_size << " layout=" << o.layout
        << " workers=" << o.workers << '\n';
    print_summaries(out, report.summaries);
    if (report.failed) {
      err << "error: " << report.failure << '\n';
      return kRuntime;
    }
    return kOk;
  });
}

int sweep_command(const SweepOptions& o, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    SweepConfig config;
    config.function = bench::parse_function_id(o.function);
    if (o.triples != "builtin-table-3.4") {
      std::ifstream in(o.triples);
      if (!in) throw Error("cannot open triples file " + o.triples);
      config.triples = read_triples(in);
    }
    config.runs = o.runs;
    config.schedule = parse_schedule(o.schedule);
    config.workers = o.workers;
    config.base.nsol = o.nsol;
    config.base.nvar = o.nvar;
    config.base.niter = o.iters;
    config.base_seed = o.seed;
    config.strict = o.strict;

    const auto report = parameter_sweep(config);
    if (!o.out.empty()) write_runs_csv(std::filesystem::path(o.out), report.records);
    out << "  cw    cp    cg  runs         Avg.         Std.         Min.   rank_sum  mean_rank\n";
    for (const auto& g : report.groups) {
      char line[200];
      std::snprintf(line, sizeof line, "%4.2f  %4.2f  %4.2f %5zu %12.4f %12s %12.4f %10.1f %10.3f\n",
                    g.triple.cw, g.triple.cp, g.triple.cg, g.summary.count, g.summary.mean,
                    g.summary.std ? fmt(*g.summary.std).c_str() : "-", g.summary.min, g.rank_sum,
                    g.mean_rank);
      out << line;
    }
    for (const auto& d : report.diagnostics) err << "note: " << d << '\n';
    if (report.kruskal) print_test(out, *report.kruskal);
    return kOk;
  });
}

int compare_command(const CompareOptions& o, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto a = read_runs_csv(std::filesystem::path(o.input_a));
    const auto b = read_runs_csv(std::filesystem::path(o.input_b));
    using Key = std::pair<std::string, std::size_t>;
    std::map<Key, std::map<std::int64_t, const RunRecord*>> cells_a, cells_b;
    for (const auto& r : a.records) cells_a[{r.function, r.params.nsol}][r.run_id] = &r;
    for (const auto& r : b.records) cells_b[{r.function, r.params.nsol}][r.run_id] = &r;

    bool degenerate = false;
    bool any = false;
    for (const auto& [key, runs_a] : cells_a) {
      const auto it = cells_b.find(key);
      if (it == cells_b.end()) continue;
      any = true;
      const auto& runs_b = it->second;
      std::vector<double> times_a, times_b;
      for (const auto& [id, r] : runs_a) times_a.push_back(r->wall_time_s);
      for (const auto& [id, r] : runs_b) times_b.push_back(r->wall_time_s);
      const auto s = compute_speedup(times_a, times_b, o.power_a, o.power_b, key.second);
      out << "function=" << key.first << " nsol=" << key.second
          << " mean_time_a=" << fmt(s.mean_time_a, "%.6g")
          << " mean_time_b=" << fmt(s.mean_time_b, "%.6g") << " speedup=" << fmt(s.speedup)
          << " power_ratio=" << fmt(s.power_ratio) << " RE=" << fmt(s.rectified_efficiency)
          << '\n';

      std::vector<stats::Sample> blocks;
      for (const auto& [id, ra] : runs_a) {
        const auto rb = runs_b.find(id);
        if (rb != runs_b.end()) blocks.push_back({ra->best_fitness, rb->second->best_fitness});
      }
      if (blocks.size() < 2) {
        err << "note: " << key.first << ": fewer than 2 paired runs, Friedman skipped\n";
        continue;
      }
      const auto f = stats::friedman(blocks);
      degenerate = degenerate || f.degenerate;
      print_test(out, f, key.first);
    }
    if (!any) throw InvalidArgument("the two inputs share no (function, nsol) cell");
    if (degenerate && o.strict) return kDegenerate;
    return kOk;
  });
}

int stats_command(const StatsOptions& o, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto csv = read_runs_csv(std::filesystem::path(o.input));
    if (csv.failure) err << "warning: input marked failed: " << *csv.failure << '\n';
    const bool use_time = o.value == "wall_time_s";
    std::vector<std::string> labels;
    std::map<std::string, std::map<std::int64_t, double>> by_group;
    for (const auto& r : csv.records) {
      const auto label = column_value(r, o.group_by);
      if (!by_group.contains(label)) labels.push_back(label);
      by_group[label][r.run_id] = use_time ? r.wall_time_s : r.best_fitness;
    }
    std::vector<stats::Sample> groups;
    for (const auto& label : labels) {
      stats::Sample s;
      for (const auto& [id, v] : by_group[label]) s.push_back(v);
      groups.push_back(std::move(s));
    }

    std::vector<stats::TestResult> results;
    if (o.test == "kruskal") {
      results.push_back(stats::kruskal_wallis(groups));
    } else if (o.test == "bartlett") {
      results.push_back(stats::variance_homogeneity(groups, stats::VarianceMethod::kBartlett));
    } else if (o.test == "levene") {
      results.push_back(stats::variance_homogeneity(groups, stats::VarianceMethod::kLeveneMean));
    } else if (o.test == "ttest") {
      if (groups.size() != 2) {
        throw InvalidArgument("ttest needs exactly 2 groups, '" + o.group_by + "' gives " +
                              std::to_string(groups.size()));
      }
      results.push_back(stats::t_test_independent(groups[0], groups[1]));
    } else if (o.test == "friedman") {
      std::set<std::int64_t> common;
      for (const auto& [id, v] : by_group[labels.front()]) common.insert(id);
      for (const auto& label : labels) {
        std::set<std::int64_t> keep;
        for (auto id : common) {
          if (by_group[label].contains(id)) keep.insert(id);
        }
        common = std::move(keep);
      }
      std::vector<stats::Sample> blocks;
      for (auto id : common) {
        stats::Sample block;
        for (const auto& label : labels) block.push_back(by_group[label][id]);
        blocks.push_back(std::move(block));
      }
      results.push_back(stats::friedman(blocks));
    } else if (o.test == "normality") {
      for (std::size_t g = 0; g < groups.size(); ++g) {
        print_test(out, stats::normality(groups[g]), labels[g]);
      }
      return kOk;
    } else {
      throw InvalidArgument("unknown test '" + o.test + "'");
    }

    out << "# groups (" << o.group_by << "):";
    for (const auto& l : labels) out << ' ' << l;
    out << '\n';
    bool degenerate = false;
    for (const auto& r : results) {
      print_test(out, r);
      degenerate = degenerate || r.degenerate;
    }
    if (degenerate && o.strict) return kDegenerate;
    return kOk;
  });
}

int plot_command(const PlotOptions& o, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const std::filesystem::path input(o.input);
    auto csv = read_runs_csv(input);
    ExperimentReport report;
    report.records = std::move(csv.records);
    const auto kind = parse_plot_kind(o.kind);
    if (kind == PlotKind::kTrajectory) {
      std::ifstream traj(sibling_path(input, "_trajectory.csv"));
      if (!traj) {
        throw InvalidArgument("no trajectory file next to " + o.input +
                              " (rerun with --trajectory)");
      }
      read_trajectory_csv(traj, report.records);
    }
    if (o.out.empty()) {
      emit_plot_data(out, report, kind, o.power_a, o.power_b);
    } else {
      const std::filesystem::path path(o.out);
      if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
      std::ofstream file(path);
      if (!file) throw Error("cannot open " + o.out + " for writing");
      emit_plot_data(file, report, kind, o.power_a, o.power_b);
    }
    return kOk;
  });
}

int functions_command(std::size_t dimension, bool ledger, bool strict, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (ledger) {
      out << bench::deviation_ledger_json() << '\n';
      return kOk;
    }
    const auto suite = bench::list_suite(dimension, strict);
    for (const auto& w : suite.warnings) err << "warning: " << w << '\n';
    for (const auto& fn : suite.functions) {
      out << fn.token() << ' ' << fn.name() << " [" << fn.var_min() << ", " << fn.var_max()
          << "]^" << fn.dimension() << " reference_value=" << fmt(fn.reference_value(), "%.6f")
          << '\n';
    }
    return kOk;
  });
}

}  // namespace psso::cli
