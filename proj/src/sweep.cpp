#include "psso/sweep.hpp"

#include <istream>
#include <sstream>
#include <string>

#include "psso/error.hpp"
#include "psso/parallel.hpp"

namespace psso {

std::vector<Thresholds> read_triples(std::istream& is) {
  std::vector<Thresholds> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    for (char& c : line) {
      if (c == ',') c = ' ';
    }
    std::istringstream fields(line);
    Thresholds t;
    std::string extra;
    if (!(fields >> t.cw >> t.cp >> t.cg) || (fields >> extra)) {
      throw InvalidArgument("triples line " + std::to_string(line_no) +
                            ": expected three numbers cw,cp,cg");
    }
    out.push_back(t);
  }
  return out;
}

SweepReport parameter_sweep(const SweepConfig& config) {
  if (config.triples.empty()) throw InvalidArgument("sweep: no threshold combinations given");
  if (config.runs < 1) throw InvalidArgument("sweep: runs must be >= 1");
  for (std::size_t i = 0; i < config.triples.size(); ++i) {
    const auto& t = config.triples[i];
    if (auto problem = check_thresholds(t.cw, t.cp, t.cg); !problem.empty()) {
      throw InvalidArgument("sweep: combination " + std::to_string(i + 1) + ": " + problem);
    }
  }

  SsoParams base = config.base;
  ObjectiveFn objective = config.objective_override;
  std::string function_name = "custom";
  if (!objective) {
    const bench::BenchmarkFn fn(config.function, base.nvar, config.strict);
    base.var_min = fn.var_min();
    base.var_max = fn.var_max();
    objective = fn.objective();
    function_name = std::string(fn.token());
  }

  SweepReport report;
  std::vector<stats::Sample> samples;
  for (const auto& triple : config.triples) {
    SsoParams params = base;
    params.cw = triple.cw;
    params.cp = triple.cp;
    params.cg = triple.cg;
    std::vector<RunRecord> cell;
    for (int r = 0; r < config.runs; ++r) {
      RunRecord rec = run_schedule({config.schedule, config.workers}, params, objective,
                                   config.base_seed + static_cast<std::uint64_t>(r),
                                   LayoutMode::kParticleMajor, false);
      rec.run_id = r;
      rec.function = function_name;
      cell.push_back(rec);
    }
    stats::Sample sample;
    for (const auto& rec : cell) sample.push_back(rec.best_fitness);
    samples.push_back(std::move(sample));
    SweepGroup group;
    group.triple = triple;
    group.summary = summarize(cell).front();
    report.groups.push_back(group);
    for (auto& rec : cell) report.records.push_back(std::move(rec));
  }

  const auto rank_sums = stats::pooled_rank_sums(samples);
  for (std::size_t g = 0; g < report.groups.size(); ++g) {
    report.groups[g].rank_sum = rank_sums[g];
    report.groups[g].mean_rank = rank_sums[g] / static_cast<double>(samples[g].size());
  }
  if (samples.size() < 2) {
    report.diagnostics.push_back(
        "Kruskal-Wallis skipped: a single combination has nothing to compare against");
  } else {
    report.kruskal = stats::kruskal_wallis(samples);
    if (report.kruskal->degenerate) report.diagnostics.push_back(report.kruskal->note);
  }
  return report;
}

}  // namespace psso
