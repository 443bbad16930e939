#include "psso/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "psso/error.hpp"
#include "psso/special_functions.hpp"

namespace psso::stats {

namespace {

double mean_of(std::span<const double> xs) {
  return std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(xs.size());
}

// Sample variance (n - 1 denominator), two-pass.
double variance_of(std::span<const double> xs) {
  const double m = mean_of(xs);
  double ss = 0.0;
  for (double x : xs) ss += (x - m) * (x - m);
  return ss / static_cast<double>(xs.size() - 1);
}

void require_groups(std::span<const Sample> groups, std::size_t min_size, const char* who) {
  if (groups.size() < 2) throw InvalidArgument(std::string(who) + ": need at least 2 groups");
  for (std::size_t g = 0; g < groups.size(); ++g) {
    if (groups[g].size() < min_size) {
      throw InvalidArgument(std::string(who) + ": group " + std::to_string(g) + " needs >= " +
                            std::to_string(min_size) + " observations");
    }
    for (double v : groups[g]) {
      if (!std::isfinite(v)) {
        throw InvalidArgument(std::string(who) + ": non-finite value in group " +
                              std::to_string(g));
      }
    }
  }
}

TestResult degenerate_result(Method method, DegreesOfFreedom df, std::string note) {
  TestResult r;
  r.statistic = 0.0;
  r.p_value = 1.0;
  r.df = df;
  r.method = method;
  r.degenerate = true;
  r.note = std::move(note);
  return r;
}

double log_normal_cdf(double z) {
  const double p = normal_cdf(z);
  return std::log(std::max(p, std::numeric_limits<double>::min()));
}

}  // namespace

std::string_view to_string(Method method) noexcept {
  switch (method) {
    case Method::kKruskalWallis:
      return "kruskal-wallis";
    case Method::kFriedman:
      return "friedman";
    case Method::kBartlett:
      return "bartlett";
    case Method::kLevene:
      return "levene-mean";
    case Method::kTTest:
      return "t-test-pooled";
    case Method::kAndersonDarling:
      return "anderson-darling";
  }
  return "unknown";
}

std::vector<double> midranks(std::span<const double> values) {
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  std::vector<double> ranks(values.size());
  std::size_t i = 0;
  while (i < order.size()) {
    std::size_t j = i + 1;
    while (j < order.size() && values[order[j]] == values[order[i]]) ++j;
    // Positions i..j-1 (0-based) share ranks i+1..j.
    const double rank = 0.5 * static_cast<double>(i + 1 + j);
    for (std::size_t k = i; k < j; ++k) ranks[order[k]] = rank;
    i = j;
  }
  return ranks;
}

double tie_term(std::span<const double> values) {
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  double total = 0.0;
  std::size_t i = 0;
  while (i < sorted.size()) {
    std::size_t j = i + 1;
    while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
    const double t = static_cast<double>(j - i);
    total += t * t * t - t;
    i = j;
  }
  return total;
}

std::vector<double> pooled_rank_sums(std::span<const Sample> groups) {
  std::vector<double> pooled;
  for (const auto& g : groups) pooled.insert(pooled.end(), g.begin(), g.end());
  const auto ranks = midranks(pooled);
  std::vector<double> sums;
  std::size_t offset = 0;
  for (const auto& g : groups) {
    sums.push_back(std::accumulate(ranks.begin() + static_cast<std::ptrdiff_t>(offset),
                                   ranks.begin() + static_cast<std::ptrdiff_t>(offset + g.size()),
                                   0.0));
    offset += g.size();
  }
  return sums;
}

TestResult kruskal_wallis(std::span<const Sample> groups) {
  require_groups(groups, 1, "kruskal_wallis");
  const DegreesOfFreedom df{static_cast<double>(groups.size() - 1), 0.0};

  std::vector<double> pooled;
  for (const auto& g : groups) pooled.insert(pooled.end(), g.begin(), g.end());
  const double n = static_cast<double>(pooled.size());
  const double correction = 1.0 - tie_term(pooled) / (n * n * n - n);
  if (correction <= 0.0) {
    return degenerate_result(Method::kKruskalWallis, df, "all pooled values identical");
  }

  const auto sums = pooled_rank_sums(groups);
  const double grand_mean_rank = 0.5 * (n + 1.0);
  double between = 0.0;
  for (std::size_t g = 0; g < groups.size(); ++g) {
    const double size = static_cast<double>(groups[g].size());
    const double dev = sums[g] / size - grand_mean_rank;
    between += size * dev * dev;
  }

  TestResult r;
  r.statistic = 12.0 / (n * (n + 1.0)) * between / correction;
  r.p_value = chi_square_sf(r.statistic, df.df1);
  r.df = df;
  r.method = Method::kKruskalWallis;
  return r;
}

TestResult friedman(std::span<const Sample> blocks) {
  if (blocks.size() < 2) throw InvalidArgument("friedman: need at least 2 blocks");
  const std::size_t k = blocks.front().size();
  if (k < 2) throw InvalidArgument("friedman: need at least 2 treatments");
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].size() != k) {
      throw InvalidArgument("friedman: block " + std::to_string(b) + " has " +
                            std::to_string(blocks[b].size()) + " treatments, expected " +
                            std::to_string(k));
    }
    for (double v : blocks[b]) {
      if (!std::isfinite(v)) throw InvalidArgument("friedman: non-finite value");
    }
  }
  const double n = static_cast<double>(blocks.size());
  const double kd = static_cast<double>(k);
  const DegreesOfFreedom df{kd - 1.0, 0.0};

  std::vector<double> rank_sums(k, 0.0);
  double ties = 0.0;
  std::size_t fully_tied = 0;
  for (const auto& block : blocks) {
    const auto ranks = midranks(block);
    for (std::size_t j = 0; j < k; ++j) rank_sums[j] += ranks[j];
    const double t = tie_term(block);
    ties += t;
    if (t == kd * kd * kd - kd) ++fully_tied;
  }
  const double correction = 1.0 - ties / (n * kd * (kd * kd - 1.0));
  if (correction <= 0.0) {
    return degenerate_result(Method::kFriedman, df, "every block entirely tied");
  }

  double spread = 0.0;
  for (double sum : rank_sums) {
    const double dev = sum / n - 0.5 * (kd + 1.0);
    spread += dev * dev;
  }
  TestResult r;
  r.statistic = 12.0 * n / (kd * (kd + 1.0)) * spread / correction;
  r.p_value = chi_square_sf(r.statistic, df.df1);
  r.df = df;
  r.method = Method::kFriedman;
  if (fully_tied > 0) {
    r.note = std::to_string(fully_tied) + " block(s) entirely tied carry no information";
  }
  return r;
}

TestResult variance_homogeneity(std::span<const Sample> groups, VarianceMethod method) {
  require_groups(groups, 2, method == VarianceMethod::kBartlett ? "bartlett" : "levene");
  const double k = static_cast<double>(groups.size());
  double total = 0.0;
  for (const auto& g : groups) total += static_cast<double>(g.size());

  if (method == VarianceMethod::kBartlett) {
    double pooled = 0.0;
    double sum_log = 0.0;
    double sum_inv = 0.0;
    for (std::size_t g = 0; g < groups.size(); ++g) {
      const double var = variance_of(groups[g]);
      if (!(var > 0.0)) {
        throw InvalidArgument("bartlett: group " + std::to_string(g) + " has zero variance");
      }
      const double dof = static_cast<double>(groups[g].size()) - 1.0;
      pooled += dof * var;
      sum_log += dof * std::log(var);
      sum_inv += 1.0 / dof;
    }
    const double within = total - k;
    pooled /= within;
    const double numerator = within * std::log(pooled) - sum_log;
    const double denominator = 1.0 + (sum_inv - 1.0 / within) / (3.0 * (k - 1.0));
    TestResult r;
    r.statistic = std::max(0.0, numerator / denominator);
    r.df = {k - 1.0, 0.0};
    r.p_value = chi_square_sf(r.statistic, r.df.df1);
    r.method = Method::kBartlett;
    return r;
  }

  // Levene: one-way ANOVA F on |y - group mean|.
  std::vector<Sample> deviations;
  deviations.reserve(groups.size());
  for (const auto& g : groups) {
    const double m = mean_of(g);
    Sample d;
    d.reserve(g.size());
    for (double v : g) d.push_back(std::abs(v - m));
    deviations.push_back(std::move(d));
  }
  double grand = 0.0;
  for (const auto& d : deviations) grand += std::accumulate(d.begin(), d.end(), 0.0);
  grand /= total;
  double between = 0.0;
  double within = 0.0;
  for (const auto& d : deviations) {
    const double m = mean_of(d);
    between += static_cast<double>(d.size()) * (m - grand) * (m - grand);
    for (double v : d) within += (v - m) * (v - m);
  }
  const DegreesOfFreedom df{k - 1.0, total - k};
  if (within == 0.0) {
    if (between == 0.0) {
      return degenerate_result(Method::kLevene, df, "all absolute deviations identical");
    }
    TestResult r = degenerate_result(Method::kLevene, df, "zero within-group spread");
    r.statistic = std::numeric_limits<double>::max();
    r.p_value = 0.0;
    return r;
  }
  TestResult r;
  r.statistic = (df.df2 / df.df1) * between / within;
  r.p_value = f_sf(r.statistic, df.df1, df.df2);
  r.df = df;
  r.method = Method::kLevene;
  return r;
}

TestResult t_test_independent(std::span<const double> a, std::span<const double> b) {
  if (a.size() < 2 || b.size() < 2) {
    throw InvalidArgument("t_test_independent: each sample needs >= 2 observations");
  }
  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  const DegreesOfFreedom df{na + nb - 2.0, 0.0};
  const double diff = mean_of(a) - mean_of(b);
  const double pooled = ((na - 1.0) * variance_of(a) + (nb - 1.0) * variance_of(b)) / df.df1;
  if (pooled == 0.0) {
    if (diff == 0.0) {
      return degenerate_result(Method::kTTest, df, "both samples constant and equal");
    }
    throw InvalidArgument("t_test_independent: zero pooled variance with distinct means");
  }
  TestResult r;
  r.statistic = diff / std::sqrt(pooled * (1.0 / na + 1.0 / nb));
  r.p_value = student_t_two_sided(r.statistic, df.df1);
  r.df = df;
  r.method = Method::kTTest;
  return r;
}

TestResult normality(std::span<const double> sample) {
  if (sample.size() < 8) throw InvalidArgument("normality: need at least 8 observations");
  for (double v : sample) {
    if (!std::isfinite(v)) throw InvalidArgument("normality: non-finite value");
  }
  const double n = static_cast<double>(sample.size());
  const double m = mean_of(sample);
  const double sd = std::sqrt(variance_of(sample));
  if (!(sd > 0.0)) throw InvalidArgument("normality: zero-variance sample is degenerate");

  std::vector<double> z(sample.begin(), sample.end());
  std::sort(z.begin(), z.end());
  for (double& v : z) v = (v - m) / sd;

  double sum = 0.0;
  const std::size_t count = z.size();
  for (std::size_t i = 0; i < count; ++i) {
    const double weight = 2.0 * static_cast<double>(i) + 1.0;
    sum += weight * (log_normal_cdf(z[i]) + log_normal_cdf(-z[count - 1 - i]));
  }
  const double a2 = -n - sum / n;

  // Case 3 (mean and variance estimated): D'Agostino & Stephens (1986).
  const double adj = a2 * (1.0 + 0.75 / n + 2.25 / (n * n));
  double p;
  if (adj >= 0.6) {
    p = std::exp(1.2937 - 5.709 * adj + 0.0186 * adj * adj);
  } else if (adj >= 0.34) {
    p = std::exp(0.9177 - 4.279 * adj - 1.38 * adj * adj);
  } else if (adj >= 0.2) {
    p = 1.0 - std::exp(-8.318 + 42.796 * adj - 59.938 * adj * adj);
  } else {
    p = 1.0 - std::exp(-13.436 + 101.14 * adj - 223.73 * adj * adj);
  }

  TestResult r;
  r.statistic = a2;
  r.p_value = std::clamp(p, 0.0, 1.0);
  r.method = Method::kAndersonDarling;
  r.note = "Anderson-Darling, estimated parameters";
  return r;
}

}  // namespace psso::stats
