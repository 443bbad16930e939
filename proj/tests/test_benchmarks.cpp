#include <gtest/gtest.h>

#include <cmath>
#include <nlohmann/json.hpp>
#include <numbers>
#include <random>

#include "psso/benchmarks.hpp"
#include "psso/error.hpp"

namespace psso::bench {
namespace {

constexpr FunctionId kAll[] = {FunctionId::kF1, FunctionId::kF2, FunctionId::kF3,
                               FunctionId::kF4, FunctionId::kF5, FunctionId::kF6,
                               FunctionId::kF7, FunctionId::kF8, FunctionId::kF9};

// Straightforward long-double versions used as oracles.
long double oracle(FunctionId id, const std::vector<double>& x) {
  const std::size_t n = x.size();
  long double s = 0.0L;
  switch (id) {
    case FunctionId::kF1:
      for (double v : x) s += static_cast<long double>(v) * v;
      return s;
    case FunctionId::kF2:
      for (std::size_t i = 0; i < n; ++i) s += (i + 1) * static_cast<long double>(x[i]) * x[i];
      return s;
    case FunctionId::kF3:
      for (std::size_t i = 0; i < n; ++i) {
        long double inner = 0.0L;
        for (std::size_t j = 0; j <= i; ++j) inner += x[j];
        s += inner * inner;
      }
      return s;
    case FunctionId::kF4:
      for (std::size_t i = 0; i + 1 < n; ++i) {
        const long double a = static_cast<long double>(x[i + 1]) - static_cast<long double>(x[i]) * x[i];
        const long double b = 1.0L - x[i];
        s += 100.0L * a * a + b * b;
      }
      return s;
    case FunctionId::kF5:
      for (double v : x) s += v * static_cast<long double>(v) - 10.0L * std::cos(2.0L * std::numbers::pi_v<long double> * v);
      return 10.0L * n + s;
    case FunctionId::kF6: {
      long double sq = 0.0L, cs = 0.0L;
      for (double v : x) {
        sq += static_cast<long double>(v) * v;
        cs += std::cos(2.0L * std::numbers::pi_v<long double> * v);
      }
      return -20.0L * std::exp(-0.2L * std::sqrt(sq / n)) - std::exp(cs / n) + 20.0L +
             std::numbers::e_v<long double>;
    }
    case FunctionId::kF7: {
      long double sq = 0.0L, pr = 1.0L;
      for (std::size_t i = 0; i < n; ++i) {
        sq += static_cast<long double>(x[i]) * x[i];
        pr *= std::cos(x[i] / std::sqrt(static_cast<long double>(i + 1)));
      }
      return sq / 4000.0L - pr + 1.0L;
    }
    case FunctionId::kF8:
      for (std::size_t g = 0; g + 4 <= n; g += 4) {
        const long double a = x[g], b = x[g + 1], c = x[g + 2], d = x[g + 3];
        s += (a + 10 * b) * (a + 10 * b) + 5 * (c - d) * (c - d) +
             std::pow(b - 2 * c, 4.0L) + 10 * std::pow(a - d, 4.0L);
      }
      return s;
    case FunctionId::kF9:
      for (double v : x) s += v * std::sin(std::sqrt(std::fabs(static_cast<long double>(v))));
      return 418.9829L * n - s;
  }
  return 0.0L;
}

std::vector<double> random_point(const BenchmarkFn& fn, std::mt19937_64& gen) {
  std::uniform_real_distribution<double> dist(fn.var_min(), fn.var_max());
  std::vector<double> x(fn.dimension());
  for (double& v : x) v = dist(gen);
  return x;
}

TEST(Benchmarks, WorkedValues) {
  EXPECT_DOUBLE_EQ(BenchmarkFn(FunctionId::kF2, 3)(std::vector<double>{1, 1, 1}), 6.0);
  EXPECT_NEAR(BenchmarkFn(FunctionId::kF9, 50)(std::vector<double>(50, 0.0)), 20949.145, 1e-9);
  EXPECT_DOUBLE_EQ(BenchmarkFn(FunctionId::kF3, 8)(std::vector<double>(8, 1.0)), 204.0);
  EXPECT_DOUBLE_EQ(BenchmarkFn(FunctionId::kF4, 2)(std::vector<double>{0, 0}), 1.0);
  EXPECT_DOUBLE_EQ(BenchmarkFn(FunctionId::kF8, 4)(std::vector<double>{1, 0, 0, 0}), 11.0);
}

TEST(Benchmarks, MatchesOracleOnRandomPoints) {
  std::mt19937_64 gen(3);
  for (FunctionId id : kAll) {
    for (std::size_t dim : {4u, 8u, 12u, 50u}) {
      const BenchmarkFn fn(id, dim, false);
      for (int k = 0; k < 200; ++k) {
        const auto x = random_point(fn, gen);
        const double expected = static_cast<double>(oracle(id, x));
        EXPECT_NEAR(fn(x), expected, 1e-10 * std::max(1.0, std::fabs(expected)))
            << fn.token() << " dim " << dim;
      }
    }
  }
}

TEST(Benchmarks, ReferencePoints) {
  for (FunctionId id : kAll) {
    const BenchmarkFn fn(id, 8);
    const auto x = fn.reference_point();
    ASSERT_EQ(x.size(), 8u);
    EXPECT_NEAR(fn(x), fn.reference_value(), 1e-9) << fn.token();
    EXPECT_FALSE(fn.evaluate(x).out_of_bounds);
    if (id != FunctionId::kF9) {
      EXPECT_NEAR(fn.reference_value(), 0.0, 1e-12);
    }
  }
  const BenchmarkFn f4(FunctionId::kF4, 5);
  EXPECT_EQ(f4.reference_point(), std::vector<double>(5, 1.0));
  const BenchmarkFn f9(FunctionId::kF9, 50);
  EXPECT_EQ(f9.reference_point(), std::vector<double>(50, 5.12));
  EXPECT_NEAR(f9.reference_value(), 50 * (418.9829 - 5.12 * std::sin(std::sqrt(5.12))), 1e-9);
}

TEST(Benchmarks, ReferencePointIsLocallyMinimal) {
  std::mt19937_64 gen(5);
  std::normal_distribution<double> nudge(0.0, 1e-3);
  for (FunctionId id : kAll) {
    const BenchmarkFn fn(id, 8);
    const auto x0 = fn.reference_point();
    for (int k = 0; k < 200; ++k) {
      auto x = x0;
      for (double& v : x) v = std::clamp(v + nudge(gen), fn.var_min(), fn.var_max());
      EXPECT_GE(fn(x), fn.reference_value() - 1e-12) << fn.token();
    }
  }
}

TEST(Benchmarks, SymmetricFunctions) {
  std::mt19937_64 gen(8);
  for (FunctionId id : {FunctionId::kF1, FunctionId::kF2, FunctionId::kF5, FunctionId::kF6,
                        FunctionId::kF7}) {
    const BenchmarkFn fn(id, 10);
    for (int k = 0; k < 500; ++k) {
      auto x = random_point(fn, gen);
      const double a = fn(x);
      for (double& v : x) v = -v;
      EXPECT_NEAR(fn(x), a, 1e-12 * std::max(1.0, std::fabs(a))) << fn.token();
    }
  }
}

TEST(Benchmarks, SeparableFunctions) {
  std::mt19937_64 gen(9);
  for (FunctionId id : {FunctionId::kF1, FunctionId::kF2, FunctionId::kF5, FunctionId::kF9}) {
    const BenchmarkFn fn(id, 6);
    for (int k = 0; k < 200; ++k) {
      const auto x = random_point(fn, gen);
      const auto y = random_point(fn, gen);
      auto z = x;
      z[3] = y[3];
      // Changing one coordinate changes the value by the one-term difference.
      auto x_only = std::vector<double>(6, 0.0);
      auto z_only = x_only;
      x_only[3] = x[3];
      z_only[3] = y[3];
      const double lhs = fn(z) - fn(x);
      const double rhs = fn(z_only) - fn(x_only);
      EXPECT_NEAR(lhs, rhs, 1e-8 * std::max(1.0, std::fabs(fn(x)))) << fn.token();
    }
  }
}

TEST(Benchmarks, NonNegativeInsideBounds) {
  std::mt19937_64 gen(10);
  for (FunctionId id : kAll) {
    const BenchmarkFn fn(id, 12);
    double lowest = std::numeric_limits<double>::infinity();
    for (int k = 0; k < 100000 / 9; ++k) lowest = std::min(lowest, fn(random_point(fn, gen)));
    if (id == FunctionId::kF9) {
      EXPECT_GE(lowest, fn.reference_value() - 1e-9);
    } else {
      EXPECT_GE(lowest, -1e-12) << fn.token();
    }
  }
}

TEST(Benchmarks, Bounds) {
  const std::pair<FunctionId, std::pair<double, double>> expected[] = {
      {FunctionId::kF1, {-5.12, 5.12}},     {FunctionId::kF2, {-5.12, 5.12}},
      {FunctionId::kF3, {-65.536, 65.536}}, {FunctionId::kF4, {-2.048, 2.048}},
      {FunctionId::kF5, {-5.12, 5.12}},     {FunctionId::kF6, {-32.768, 32.768}},
      {FunctionId::kF7, {-600.0, 600.0}},   {FunctionId::kF8, {-4.0, 5.0}},
      {FunctionId::kF9, {-5.12, 5.12}}};
  for (const auto& [id, b] : expected) {
    const BenchmarkFn fn(id, 4);
    EXPECT_EQ(fn.var_min(), b.first);
    EXPECT_EQ(fn.var_max(), b.second);
  }
}

TEST(ListSuite, DimensionFour) {
  const SuiteResult s = list_suite(4);
  ASSERT_EQ(s.functions.size(), 9u);
  EXPECT_TRUE(s.warnings.empty());
  for (std::size_t k = 0; k < 9; ++k) EXPECT_EQ(s.functions[k].id(), kAll[k]);
}

TEST(ListSuite, DimensionFifty) {
  EXPECT_THROW(list_suite(50, true), InvalidArgument);
  const SuiteResult s = list_suite(50, false);
  EXPECT_EQ(s.functions.size(), 8u);
  ASSERT_EQ(s.warnings.size(), 1u);
  EXPECT_NE(s.warnings[0].find("f8"), std::string::npos);
  for (const auto& fn : s.functions) EXPECT_NE(fn.id(), FunctionId::kF8);
}

TEST(Powell, StrictAndLenient) {
  EXPECT_THROW(BenchmarkFn(FunctionId::kF8, 50, true), InvalidArgument);
  EXPECT_THROW(BenchmarkFn(FunctionId::kF8, 3, false), InvalidArgument);
  const BenchmarkFn lenient(FunctionId::kF8, 50, false);
  EXPECT_TRUE(lenient.truncated());
  EXPECT_FALSE(BenchmarkFn(FunctionId::kF8, 48).truncated());
  // The trailing two variables do not contribute.
  std::vector<double> x(50, 1.0);
  const double a = lenient(x);
  x[48] = 3.0;
  x[49] = -2.0;
  EXPECT_EQ(lenient(x), a);
  EXPECT_EQ(a, 12 * 122.0);
}

TEST(Benchmarks, DimensionMismatchThrows) {
  const BenchmarkFn fn(FunctionId::kF1, 4);
  EXPECT_THROW(fn.evaluate(std::vector<double>(3, 0.0)), InvalidArgument);
  EXPECT_THROW(BenchmarkFn(FunctionId::kF1, 0), InvalidArgument);
}

TEST(Benchmarks, OutOfBoundsFlag) {
  const BenchmarkFn fn(FunctionId::kF1, 2);
  const Evaluation e = fn.evaluate(std::vector<double>{6.0, 0.0});
  EXPECT_TRUE(e.out_of_bounds);
  EXPECT_DOUBLE_EQ(e.value, 36.0);
  EXPECT_FALSE(fn.evaluate(std::vector<double>{5.12, -5.12}).out_of_bounds);
}

TEST(Benchmarks, Tokens) {
  for (FunctionId id : kAll) EXPECT_EQ(parse_function_id(to_token(id)), id);
  EXPECT_EQ(parse_function_id("F3"), FunctionId::kF3);
  EXPECT_THROW(parse_function_id("f10"), InvalidArgument);
  EXPECT_THROW(parse_function_id("sphere"), InvalidArgument);
}

TEST(Benchmarks, ObjectiveWrapsOperator) {
  const BenchmarkFn fn(FunctionId::kF6, 3);
  const std::vector<double> x{0.5, -1.0, 2.0};
  EXPECT_EQ(fn.objective()(x), fn(x));
}

TEST(DeviationLedger, JsonParses) {
  const auto doc = nlohmann::json::parse(deviation_ledger_json());
  ASSERT_TRUE(doc.is_array());
  EXPECT_EQ(doc.size(), deviation_ledger().size());
  for (const auto& entry : doc) {
    EXPECT_TRUE(entry.contains("function"));
    EXPECT_TRUE(entry.contains("printed"));
    EXPECT_TRUE(entry.contains("implemented"));
    EXPECT_TRUE(entry.contains("reason"));
  }
}

}  // namespace
}  // namespace psso::bench
