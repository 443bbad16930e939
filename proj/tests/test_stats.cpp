#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "psso/error.hpp"
#include "psso/special_functions.hpp"
#include "psso/stats.hpp"

namespace psso::stats {
namespace {

const std::vector<Sample> kThree = {{2.9, 3.0, 2.5, 2.6, 3.2}, {3.8, 2.7, 4.0, 2.4},
                                    {2.8, 3.4, 3.7, 2.2, 2.0}};

// O(n^2) mid-rank oracle: rank = (#less) + (#equal + 1) / 2.
std::vector<long double> naive_ranks(const std::vector<double>& v) {
  std::vector<long double> r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    long double less = 0, equal = 0;
    for (double w : v) {
      if (w < v[i]) ++less;
      if (w == v[i]) ++equal;
    }
    r[i] = less + (equal + 1) / 2;
  }
  return r;
}

long double naive_kruskal(const std::vector<Sample>& groups) {
  std::vector<double> pooled;
  for (const auto& g : groups) pooled.insert(pooled.end(), g.begin(), g.end());
  const auto ranks = naive_ranks(pooled);
  const long double n = pooled.size();
  long double h = 0;
  std::size_t at = 0;
  for (const auto& g : groups) {
    long double sum = 0;
    for (std::size_t k = 0; k < g.size(); ++k) sum += ranks[at++];
    h += sum * sum / g.size();
  }
  h = 12 / (n * (n + 1)) * h - 3 * (n + 1);
  std::vector<double> sorted = pooled;
  std::sort(sorted.begin(), sorted.end());
  long double ties = 0;
  for (std::size_t i = 0; i < sorted.size();) {
    std::size_t j = i;
    while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
    const long double t = j - i;
    ties += t * t * t - t;
    i = j;
  }
  return h / (1 - ties / (n * n * n - n));
}

long double naive_bartlett(const std::vector<Sample>& groups) {
  long double big_n = 0, pooled = 0, sum_log = 0, sum_inv = 0;
  const long double k = groups.size();
  for (const auto& g : groups) {
    const long double n = g.size();
    long double m = 0;
    for (double v : g) m += v;
    m /= n;
    long double ss = 0;
    for (double v : g) ss += (v - m) * (v - m);
    const long double var = ss / (n - 1);
    big_n += n;
    pooled += (n - 1) * var;
    sum_log += (n - 1) * std::log(var);
    sum_inv += 1 / (n - 1);
  }
  pooled /= big_n - k;
  const long double num = (big_n - k) * std::log(pooled) - sum_log;
  const long double den = 1 + (sum_inv - 1 / (big_n - k)) / (3 * (k - 1));
  return num / den;
}

TEST(Ranks, MidranksMatchNaive) {
  std::mt19937_64 gen(1);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<double> v(1 + gen() % 30);
    for (double& x : v) x = static_cast<double>(gen() % 6);
    const auto fast = midranks(v);
    const auto slow = naive_ranks(v);
    for (std::size_t i = 0; i < v.size(); ++i) EXPECT_DOUBLE_EQ(fast[i], static_cast<double>(slow[i]));
  }
  EXPECT_EQ(tie_term(std::vector<double>{1, 1, 2, 3, 3, 3}), 6.0 + 24.0);
}

TEST(KruskalWallis, SeparatedGroups) {
  const std::vector<Sample> g = {{1, 2}, {3, 4}, {5, 6}};
  const TestResult r = kruskal_wallis(g);
  EXPECT_NEAR(r.statistic, 32.0 / 7.0, 1e-12);
  EXPECT_EQ(r.df.df1, 2.0);
  EXPECT_NEAR(r.p_value, std::exp(-16.0 / 7.0), 1e-12);
  EXPECT_FALSE(r.degenerate);
  EXPECT_EQ(r.method, Method::kKruskalWallis);
}

TEST(KruskalWallis, MatchesNaiveAndReference) {
  EXPECT_NEAR(kruskal_wallis(kThree).statistic, 0.7714285714285722, 1e-12);
  EXPECT_NEAR(kruskal_wallis(kThree).p_value, 0.6799647735788936, 1e-10);
  const std::vector<Sample> tied = {{1, 1, 2, 2, 3}, {2, 3, 3, 4}, {1, 4, 4, 5, 5}};
  EXPECT_NEAR(kruskal_wallis(tied).statistic, 5.075342465753425, 1e-12);
  std::mt19937_64 gen(4);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<Sample> groups(2 + gen() % 4);
    for (auto& g : groups) {
      g.resize(2 + gen() % 6);
      for (double& v : g) v = static_cast<double>(gen() % 10);
    }
    const TestResult r = kruskal_wallis(groups);
    if (!r.degenerate) {
      EXPECT_NEAR(r.statistic, static_cast<double>(naive_kruskal(groups)), 1e-10);
    }
  }
}

TEST(KruskalWallis, IdenticalValuesAreDegenerate) {
  const std::vector<Sample> g = {{7, 7, 7}, {7, 7}, {7, 7, 7, 7}};
  const TestResult r = kruskal_wallis(g);
  EXPECT_EQ(r.statistic, 0.0);
  EXPECT_EQ(r.p_value, 1.0);
  EXPECT_TRUE(r.degenerate);
}

TEST(KruskalWallis, RankAndPermutationInvariance) {
  std::mt19937_64 gen(5);
  std::normal_distribution<double> dist;
  std::vector<Sample> groups(4, Sample(9));
  for (auto& g : groups) {
    for (double& v : g) v = dist(gen);
  }
  const double h = kruskal_wallis(groups).statistic;
  auto transformed = groups;
  for (auto& g : transformed) {
    for (double& v : g) v = std::exp(3.0 * v) + 2.0;
  }
  EXPECT_NEAR(kruskal_wallis(transformed).statistic, h, 1e-12);
  auto permuted = groups;
  std::reverse(permuted.begin(), permuted.end());
  for (auto& g : permuted) std::shuffle(g.begin(), g.end(), gen);
  EXPECT_NEAR(kruskal_wallis(permuted).statistic, h, 1e-12);
}

TEST(KruskalWallis, RejectsBadInput) {
  EXPECT_THROW(kruskal_wallis(std::vector<Sample>{{1, 2}}), InvalidArgument);
  EXPECT_THROW(kruskal_wallis(std::vector<Sample>{{1, 2}, {}}), InvalidArgument);
  EXPECT_THROW(kruskal_wallis(std::vector<Sample>{{1, NAN}, {2}}), InvalidArgument);
}

TEST(KruskalWallis, PooledRankSums) {
  const std::vector<Sample> g = {{1, 2}, {3, 4}, {5, 6}};
  EXPECT_EQ(pooled_rank_sums(g), (std::vector<double>{3.0, 7.0, 11.0}));
}

TEST(Friedman, ConsistentOrdering) {
  // n = 3 blocks, k = 2 treatments, treatment 1 always better.
  const std::vector<Sample> blocks = {{1, 2}, {3, 4}, {5, 9}};
  const TestResult r = friedman(blocks);
  EXPECT_NEAR(r.statistic, 3.0, 1e-12);
  EXPECT_EQ(r.df.df1, 1.0);
  EXPECT_NEAR(r.p_value, chi_square_sf(3.0, 1.0), 1e-14);
}

TEST(Friedman, Reference) {
  const std::vector<Sample> blocks = {{1, 2, 3}, {2, 3, 1}, {3, 1, 2},
                                      {1, 3, 2}, {1, 2, 3}, {2, 2, 3}};
  const TestResult r = friedman(blocks);
  EXPECT_NEAR(r.statistic, 1.826086956521739, 1e-12);
  EXPECT_NEAR(r.p_value, 0.4013010126611193, 1e-10);
}

TEST(Friedman, AllTiedIsDegenerate) {
  const std::vector<Sample> blocks = {{4, 4, 4}, {1, 1, 1}};
  const TestResult r = friedman(blocks);
  EXPECT_EQ(r.statistic, 0.0);
  EXPECT_EQ(r.p_value, 1.0);
  EXPECT_TRUE(r.degenerate);
}

TEST(Friedman, NotesFullyTiedBlocks) {
  const std::vector<Sample> blocks = {{1, 2}, {3, 4}, {5, 5}};
  const TestResult r = friedman(blocks);
  EXPECT_FALSE(r.degenerate);
  EXPECT_NE(r.note.find("1 block"), std::string::npos);
}

TEST(Friedman, RejectsRaggedBlocks) {
  EXPECT_THROW(friedman(std::vector<Sample>{{1, 2}, {1, 2, 3}}), InvalidArgument);
  EXPECT_THROW(friedman(std::vector<Sample>{{1, 2}}), InvalidArgument);
}

TEST(Bartlett, MatchesOracle) {
  const std::vector<Sample> g = {{1, 2, 3, 4}, {10, 20, 30, 40}};
  const TestResult r = variance_homogeneity(g, VarianceMethod::kBartlett);
  EXPECT_NEAR(r.statistic, static_cast<double>(naive_bartlett(g)), 1e-8);
  EXPECT_EQ(r.df.df1, 1.0);
  EXPECT_NEAR(variance_homogeneity(kThree, VarianceMethod::kBartlett).statistic,
              3.2794144046012064, 1e-10);
  EXPECT_NEAR(variance_homogeneity(kThree, VarianceMethod::kBartlett).p_value,
              0.1940368475168175, 1e-10);
}

TEST(Bartlett, ScaleInvariance) {
  auto scaled = kThree;
  for (auto& g : scaled) {
    for (double& v : g) v = 1000.0 * v - 7.0;
  }
  EXPECT_NEAR(variance_homogeneity(scaled, VarianceMethod::kBartlett).statistic,
              variance_homogeneity(kThree, VarianceMethod::kBartlett).statistic, 1e-9);
}

TEST(Bartlett, ZeroVarianceThrows) {
  const std::vector<Sample> g = {{1, 1, 1}, {1, 2, 3}};
  EXPECT_THROW(variance_homogeneity(g, VarianceMethod::kBartlett), InvalidArgument);
}

TEST(Levene, HandComputed) {
  // Deviations: group a {1,0,1} (mean 2), group b {2,0,2} (mean 4).
  // z-means 2/3 and 4/3, grand 1; between = 3*(1/9)*2 = 2/3; within = 2/3 + 8/3 = 10/3.
  // F = (2/3 / 1) / (10/3 / 4) = 0.8.
  const std::vector<Sample> g = {{1, 2, 3}, {2, 4, 6}};
  const TestResult r = variance_homogeneity(g, VarianceMethod::kLeveneMean);
  EXPECT_NEAR(r.statistic, 0.8, 1e-12);
  EXPECT_EQ(r.df.df1, 1.0);
  EXPECT_EQ(r.df.df2, 4.0);
  EXPECT_NEAR(r.p_value, f_sf(0.8, 1, 4), 1e-14);
  EXPECT_NEAR(variance_homogeneity(kThree, VarianceMethod::kLeveneMean).statistic,
              4.781469208069268, 1e-10);
}

TEST(TTest, WorkedExample) {
  const TestResult r = t_test_independent(std::vector<double>{1, 2, 3}, std::vector<double>{4, 5, 6});
  EXPECT_NEAR(r.statistic, -3.6742346141747673, 1e-12);
  EXPECT_EQ(r.df.df1, 4.0);
  EXPECT_NEAR(r.p_value, 0.021311641128756727, 1e-10);
}

TEST(TTest, Antisymmetry) {
  const auto& a = kThree[0];
  const auto& c = kThree[2];
  const TestResult ac = t_test_independent(a, c);
  const TestResult ca = t_test_independent(c, a);
  EXPECT_NEAR(ac.statistic, 0.05656854249492511, 1e-12);
  EXPECT_EQ(ac.statistic, -ca.statistic);
  EXPECT_EQ(ac.p_value, ca.p_value);
}

TEST(TTest, Degenerate) {
  EXPECT_TRUE(t_test_independent(std::vector<double>{2, 2}, std::vector<double>{2, 2, 2}).degenerate);
  EXPECT_THROW(t_test_independent(std::vector<double>{1, 1}, std::vector<double>{2, 2}),
               InvalidArgument);
  EXPECT_THROW(t_test_independent(std::vector<double>{1}, std::vector<double>{2, 3}),
               InvalidArgument);
}

TEST(AndersonDarling, Reference) {
  const std::vector<double> x{1.2, 0.3, -0.5, 2.2, 1.1, -1.4, 0.0, 0.8, 0.45, -0.2, 1.7, -0.9};
  const TestResult r = normality(x);
  EXPECT_NEAR(r.statistic, 0.08596415503737376, 1e-10);
  EXPECT_GT(r.p_value, 0.5);
}

TEST(AndersonDarling, NormalSamplesUsuallyPass) {
  std::mt19937_64 gen(11);
  std::normal_distribution<double> dist(3.0, 2.0);
  int passed = 0;
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<double> x(50);
    for (double& v : x) v = dist(gen);
    if (normality(x).p_value > 0.05) ++passed;
  }
  EXPECT_GE(passed, 90);
}

TEST(AndersonDarling, UniformGridRejected) {
  std::vector<double> x(200);
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = static_cast<double>(i) / 199.0;
  EXPECT_LT(normality(x).p_value, 0.05);
}

TEST(AndersonDarling, AffineInvariance) {
  std::mt19937_64 gen(12);
  std::exponential_distribution<double> dist(1.0);
  std::vector<double> x(40);
  for (double& v : x) v = dist(gen);
  auto y = x;
  for (double& v : y) v = -4.0 * v + 100.0;
  EXPECT_NEAR(normality(x).statistic, normality(y).statistic, 1e-9);
}

TEST(AndersonDarling, RejectsBadInput) {
  EXPECT_THROW(normality(std::vector<double>(7, 1.0)), InvalidArgument);
  EXPECT_THROW(normality(std::vector<double>(10, 1.0)), InvalidArgument);
}

// Under the null, p < 0.05 should happen about 5% of the time.
template <typename Test>
double rejection_rate(Test test, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::normal_distribution<double> dist;
  int rejected = 0;
  constexpr int kTrials = 1000;
  for (int trial = 0; trial < kTrials; ++trial) {
    std::vector<Sample> groups(3, Sample(20));
    for (auto& g : groups) {
      for (double& v : g) v = dist(gen);
    }
    if (test(groups).p_value < 0.05) ++rejected;
  }
  return static_cast<double>(rejected) / kTrials;
}

TEST(NullCalibration, RejectionRatesNearNominal) {
  const auto kw = [](const std::vector<Sample>& g) { return kruskal_wallis(g); };
  const auto fr = [](const std::vector<Sample>& g) {
    std::vector<Sample> blocks(g[0].size(), Sample(g.size()));
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      for (std::size_t t = 0; t < g.size(); ++t) blocks[b][t] = g[t][b];
    }
    return friedman(blocks);
  };
  const auto bt = [](const std::vector<Sample>& g) {
    return variance_homogeneity(g, VarianceMethod::kBartlett);
  };
  const auto lv = [](const std::vector<Sample>& g) {
    return variance_homogeneity(g, VarianceMethod::kLeveneMean);
  };
  const auto tt = [](const std::vector<Sample>& g) { return t_test_independent(g[0], g[1]); };
  const auto ad = [](const std::vector<Sample>& g) { return normality(g[0]); };
  for (double rate : {rejection_rate(kw, 1), rejection_rate(fr, 2), rejection_rate(bt, 3),
                      rejection_rate(lv, 4), rejection_rate(tt, 5), rejection_rate(ad, 6)}) {
    EXPECT_GE(rate, 0.03);
    EXPECT_LE(rate, 0.07);
  }
}

TEST(Methods, Names) {
  EXPECT_EQ(to_string(Method::kKruskalWallis), "kruskal-wallis");
  EXPECT_EQ(to_string(Method::kLevene), "levene-mean");
}

}  // namespace
}  // namespace psso::stats
