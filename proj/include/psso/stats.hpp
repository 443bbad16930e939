#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace psso::stats {

enum class Method { kKruskalWallis, kFriedman, kBartlett, kLevene, kTTest, kAndersonDarling };

std::string_view to_string(Method method) noexcept;

/// Degrees of freedom; df2 is 0 for single-parameter reference distributions.
struct DegreesOfFreedom {
  double df1 = 0.0;
  double df2 = 0.0;
};

struct TestResult {
  double statistic = 0.0;
  double p_value = 1.0;
  DegreesOfFreedom df;
  Method method = Method::kKruskalWallis;
  /// Set when the data carry no information for the test (all ties, etc.).
  bool degenerate = false;
  std::string note;
};

using Sample = std::vector<double>;

/// Mid-ranks (1-based) of `values`; tied values share the mean of their ranks.
std::vector<double> midranks(std::span<const double> values);
/// Sum of (t^3 - t) over tie groups of size t.
double tie_term(std::span<const double> values);

/// Kruskal-Wallis H with tie correction; chi-square(k - 1) p-value.
/// Needs >= 2 nonempty groups. All values identical -> H = 0, p = 1, degenerate.
TestResult kruskal_wallis(std::span<const Sample> groups);

/// Per-group rank sums over the pooled sample (same ranks as kruskal_wallis).
std::vector<double> pooled_rank_sums(std::span<const Sample> groups);

/// Friedman chi-square on `blocks` (n rows, k treatments each) with
/// within-block mid-ranks and tie correction; chi-square(k - 1) p-value.
TestResult friedman(std::span<const Sample> blocks);

enum class VarianceMethod { kBartlett, kLeveneMean };

/// Bartlett (chi-square(k - 1)) or mean-centred Levene (F(k - 1, N - k)).
/// Bartlett throws InvalidArgument for a zero-variance group.
TestResult variance_homogeneity(std::span<const Sample> groups, VarianceMethod method);

/// Pooled-variance two-sample t-test, two-sided, df = na + nb - 2.
TestResult t_test_independent(std::span<const double> a, std::span<const double> b);

/// Anderson-Darling normality test with estimated mean and variance.
/// Needs n >= 8 and nonzero variance.
TestResult normality(std::span<const double> sample);

}  // namespace psso::stats
