#include "psso/experiment.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>
#include <tuple>

#include "psso/error.hpp"
#include "psso/parallel.hpp"

namespace psso {

namespace {

constexpr std::string_view kFailureMarker = "# FAILED: ";

std::string format_real(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string format_seconds(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = line.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(line.substr(start));
      return out;
    }
    out.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
}

template <typename T>
T parse_integer(std::string_view text, std::string_view column, std::size_t line_no) {
  T value{};
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw Error("line " + std::to_string(line_no) + ": bad integer '" + std::string(text) +
                "' in column " + std::string(column));
  }
  return value;
}

double parse_real(std::string_view text, std::string_view column, std::size_t line_no) {
  const std::string owned(text);
  char* end = nullptr;
  const double value = std::strtod(owned.c_str(), &end);
  if (owned.empty() || end != owned.c_str() + owned.size()) {
    throw Error("line " + std::to_string(line_no) + ": bad number '" + owned + "' in column " +
                std::string(column));
  }
  return value;
}

std::string_view trim_cr(std::string_view line) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  return line;
}

}  // namespace

void ExperimentConfig::validate() const {
  if (functions.empty()) throw InvalidArgument("config key 'function': at least one required");
  if (schedules.empty()) throw InvalidArgument("config key 'schedule': at least one required");
  if (runs < 1) throw InvalidArgument("config key 'runs': must be >= 1");
  if (workers < 1) throw InvalidArgument("config key 'workers': must be >= 1");
  if (block_size < 1) throw InvalidArgument("config key 'block_size': must be >= 1");
  if (auto problem = check_thresholds(params.cw, params.cp, params.cg); !problem.empty()) {
    throw InvalidArgument("config keys 'cw'/'cp'/'cg': " + problem);
  }
  if (params.nsol < 1) throw InvalidArgument("config key 'nsol': must be >= 1");
  if (params.nvar < 1) throw InvalidArgument("config key 'nvar': must be >= 1");
  if (params.niter < 1) throw InvalidArgument("config key 'iters': must be >= 1");
  for (auto id : functions) {
    try {
      bench::BenchmarkFn(id, params.nvar, strict);
    } catch (const InvalidArgument& e) {
      throw InvalidArgument(std::string("config key 'function': ") + e.what());
    }
  }
}

std::vector<CellSummary> summarize(const std::vector<RunRecord>& records) {
  std::vector<CellSummary> out;
  std::vector<std::vector<const RunRecord*>> members;
  for (const auto& r : records) {
    auto it = std::find_if(out.begin(), out.end(), [&](const CellSummary& s) {
      return s.function == r.function && s.schedule == r.schedule;
    });
    if (it == out.end()) {
      CellSummary fresh;
      fresh.function = r.function;
      fresh.schedule = r.schedule;
      out.push_back(std::move(fresh));
      members.emplace_back();
      it = out.end() - 1;
    }
    members[static_cast<std::size_t>(it - out.begin())].push_back(&r);
  }
  for (std::size_t c = 0; c < out.size(); ++c) {
    const auto& rows = members[c];
    auto& s = out[c];
    s.count = rows.size();
    double sum = 0.0;
    double time_sum = 0.0;
    s.min = std::numeric_limits<double>::infinity();
    for (const auto* r : rows) {
      sum += r->best_fitness;
      time_sum += r->wall_time_s;
      s.min = std::min(s.min, r->best_fitness);
    }
    const double n = static_cast<double>(s.count);
    s.mean = sum / n;
    s.mean_time_s = time_sum / n;
    if (s.count > 1) {
      double ss = 0.0;
      for (const auto* r : rows) ss += (r->best_fitness - s.mean) * (r->best_fitness - s.mean);
      s.std = std::sqrt(ss / (n - 1.0));
    }
  }
  return out;
}

ExperimentReport run_experiment(const ExperimentConfig& config) {
  config.validate();
  ExperimentReport report;
  report.block_size = config.block_size;

  struct Cell {
    bench::BenchmarkFn fn;
    ScheduleKind schedule;
    SsoParams params;
  };
  std::vector<Cell> cells;
  for (auto id : config.functions) {
    bench::BenchmarkFn fn(id, config.params.nvar, config.strict);
    if (fn.truncated()) {
      report.warnings.push_back(std::string(fn.token()) + ": dimension " +
                                std::to_string(fn.dimension()) +
                                " not divisible by 4; evaluating the first " +
                                std::to_string(fn.dimension() / 4) + " groups only");
    }
    SsoParams params = config.params;
    params.var_min = fn.var_min();
    params.var_max = fn.var_max();
    for (auto schedule : config.schedules) cells.push_back({fn, schedule, params});
  }

  const auto runs = static_cast<std::size_t>(config.runs);
  std::vector<std::vector<RunRecord>> results(cells.size());
  std::vector<std::string> failures(cells.size());

  auto run_cell = [&](std::size_t c) {
    const Cell& cell = cells[c];
    const ObjectiveFn objective =
        config.objective_override ? config.objective_override : cell.fn.objective();
    for (std::size_t r = 0; r < runs; ++r) {
      const std::uint64_t seed = config.base_seed + r;
      try {
        RunRecord rec = run_schedule({cell.schedule, config.workers}, cell.params, objective, seed,
                                     config.layout, config.record_trajectory);
        rec.run_id = static_cast<std::int64_t>(r);
        rec.function = std::string(cell.fn.token());
        results[c].push_back(std::move(rec));
      } catch (const std::exception& e) {
        failures[c] = std::string(cell.fn.token()) + "/" + std::string(to_string(cell.schedule)) +
                      " run " + std::to_string(r) + ": " + e.what();
        return;
      }
    }
  };

  if (config.parallel_cells) {
    const auto n = static_cast<std::int64_t>(cells.size());
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t c = 0; c < n; ++c) run_cell(static_cast<std::size_t>(c));
  } else {
    for (std::size_t c = 0; c < cells.size(); ++c) {
      run_cell(c);
      if (!failures[c].empty()) break;
    }
  }

  for (std::size_t c = 0; c < cells.size(); ++c) {
    for (auto& rec : results[c]) report.records.push_back(std::move(rec));
    if (!failures[c].empty() && !report.failed) {
      report.failed = true;
      report.failure = failures[c];
    }
  }
  report.summaries = summarize(report.records);

  if (config.out) {
    const auto failure = report.failed ? std::optional<std::string>(report.failure) : std::nullopt;
    write_runs_csv(*config.out, report.records, failure);
    std::ofstream summary(sibling_path(*config.out, "_summary.csv"));
    if (!summary) throw Error("cannot write summary next to " + config.out->string());
    write_summary_csv(summary, report.summaries);
    if (config.record_trajectory) {
      std::ofstream traj(sibling_path(*config.out, "_trajectory.csv"));
      if (!traj) throw Error("cannot write trajectory next to " + config.out->string());
      write_trajectory_csv(traj, report.records);
    }
  }
  return report;
}

void write_runs_csv(std::ostream& os, const std::vector<RunRecord>& records,
                    const std::optional<std::string>& failure) {
  os << kRunsCsvHeader << '\n';
  for (const auto& r : records) {
    if (r.function.find_first_of(",\n") != std::string::npos) {
      throw InvalidArgument("function name '" + r.function + "' cannot be written to CSV");
    }
    os << r.run_id << ',' << to_string(r.schedule) << ',' << r.function << ',' << r.params.nsol
       << ',' << r.params.nvar << ',' << r.params.niter << ',' << format_real(r.params.cw) << ','
       << format_real(r.params.cp) << ',' << format_real(r.params.cg) << ',' << r.seed << ','
       << format_real(r.best_fitness) << ',' << format_seconds(r.wall_time_s) << '\n';
  }
  if (failure) os << kFailureMarker << *failure << '\n';
}

void write_runs_csv(const std::filesystem::path& path, const std::vector<RunRecord>& records,
                    const std::optional<std::string>& failure) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream os(path);
  if (!os) throw Error("cannot open " + path.string() + " for writing");
  write_runs_csv(os, records, failure);
}

RunsCsv read_runs_csv(std::istream& is) {
  RunsCsv out;
  std::string line;
  std::size_t line_no = 0;
  bool header_seen = false;
  while (std::getline(is, line)) {
    ++line_no;
    const std::string_view text = trim_cr(line);
    if (text.empty()) continue;
    if (text.starts_with(kFailureMarker)) {
      out.failure = std::string(text.substr(kFailureMarker.size()));
      continue;
    }
    if (text.front() == '#') continue;
    if (!header_seen) {
      if (text != kRunsCsvHeader) {
        throw Error("line " + std::to_string(line_no) + ": unexpected header '" +
                    std::string(text) + "'");
      }
      header_seen = true;
      continue;
    }
    const auto f = split(text, ',');
    if (f.size() != 12) {
      throw Error("line " + std::to_string(line_no) + ": expected 12 columns, got " +
                  std::to_string(f.size()));
    }
    RunRecord r;
    r.run_id = parse_integer<std::int64_t>(f[0], "run_id", line_no);
    r.schedule = parse_schedule(f[1]);
    r.function = std::string(f[2]);
    r.params.nsol = parse_integer<std::size_t>(f[3], "nsol", line_no);
    r.params.nvar = parse_integer<std::size_t>(f[4], "nvar", line_no);
    r.params.niter = parse_integer<std::size_t>(f[5], "niter", line_no);
    r.params.cw = parse_real(f[6], "cw", line_no);
    r.params.cp = parse_real(f[7], "cp", line_no);
    r.params.cg = parse_real(f[8], "cg", line_no);
    r.seed = parse_integer<std::uint64_t>(f[9], "seed", line_no);
    r.best_fitness = parse_real(f[10], "best_fitness", line_no);
    r.wall_time_s = parse_real(f[11], "wall_time_s", line_no);
    // Bounds are not part of the schema; recover them from benchmark tokens.
    try {
      const bench::BenchmarkFn fn(bench::parse_function_id(r.function), r.params.nvar, false);
      r.params.var_min = fn.var_min();
      r.params.var_max = fn.var_max();
    } catch (const InvalidArgument&) {
    }
    out.records.push_back(std::move(r));
  }
  if (!header_seen) throw Error("runs CSV has no header");
  return out;
}

RunsCsv read_runs_csv(const std::filesystem::path& path) {
  std::ifstream is(path);
  if (!is) throw Error("cannot open " + path.string());
  return read_runs_csv(is);
}

void write_summary_csv(std::ostream& os, const std::vector<CellSummary>& summaries) {
  os << "function,schedule,runs,avg,std,min,mean_wall_time_s\n";
  for (const auto& s : summaries) {
    os << s.function << ',' << to_string(s.schedule) << ',' << s.count << ','
       << format_real(s.mean) << ',' << (s.std ? format_real(*s.std) : std::string()) << ','
       << format_real(s.min) << ',' << format_seconds(s.mean_time_s) << '\n';
  }
}

void write_trajectory_csv(std::ostream& os, const std::vector<RunRecord>& records) {
  os << "run_id,schedule,function,iteration,g_f\n";
  for (const auto& r : records) {
    if (!r.trajectory) continue;
    for (std::size_t t = 0; t < r.trajectory->size(); ++t) {
      os << r.run_id << ',' << to_string(r.schedule) << ',' << r.function << ',' << t << ','
         << format_real((*r.trajectory)[t]) << '\n';
    }
  }
}

void read_trajectory_csv(std::istream& is, std::vector<RunRecord>& records) {
  using Key = std::tuple<std::int64_t, ScheduleKind, std::string>;
  std::map<Key, std::vector<double>> series;
  std::string line;
  std::size_t line_no = 0;
  bool header_seen = false;
  while (std::getline(is, line)) {
    ++line_no;
    const std::string_view text = trim_cr(line);
    if (text.empty() || text.front() == '#') continue;
    if (!header_seen) {
      if (text != "run_id,schedule,function,iteration,g_f") {
        throw Error("trajectory CSV: unexpected header '" + std::string(text) + "'");
      }
      header_seen = true;
      continue;
    }
    const auto f = split(text, ',');
    if (f.size() != 5) throw Error("trajectory CSV line " + std::to_string(line_no) + ": bad row");
    Key key{parse_integer<std::int64_t>(f[0], "run_id", line_no), parse_schedule(f[1]),
            std::string(f[2])};
    auto& values = series[key];
    const auto iteration = parse_integer<std::size_t>(f[3], "iteration", line_no);
    if (iteration != values.size()) {
      throw Error("trajectory CSV line " + std::to_string(line_no) + ": iterations out of order");
    }
    values.push_back(parse_real(f[4], "g_f", line_no));
  }
  for (auto& r : records) {
    const auto it = series.find(Key{r.run_id, r.schedule, r.function});
    if (it != series.end()) r.trajectory = it->second;
  }
}

std::filesystem::path sibling_path(const std::filesystem::path& out, std::string_view suffix) {
  std::filesystem::path result = out.parent_path();
  result /= out.stem().string() + std::string(suffix);
  return result;
}

}  // namespace psso
