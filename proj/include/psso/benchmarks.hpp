#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "psso/objective.hpp"

namespace psso::bench {

/// The nine test functions. Tokens "f1".."f9" are stable CLI identifiers.
enum class FunctionId { kF1 = 1, kF2, kF3, kF4, kF5, kF6, kF7, kF8, kF9 };

std::string_view to_token(FunctionId id) noexcept;
/// Accepts "f1".."f9" (case-insensitive). Throws InvalidArgument otherwise.
FunctionId parse_function_id(std::string_view token);

/// Result of evaluating at a point; `out_of_bounds` is a diagnostic only.
struct Evaluation {
  double value = 0.0;
  bool out_of_bounds = false;
};

/// One benchmark function instantiated at a fixed dimension.
class BenchmarkFn {
 public:
  /// strict: f8 requires dimension % 4 == 0. Lenient f8 evaluates the first
  /// floor(P/4) groups and ignores the remaining variables (`truncated()`).
  BenchmarkFn(FunctionId id, std::size_t dimension, bool strict = true);

  FunctionId id() const noexcept { return id_; }
  std::string_view name() const noexcept;
  std::string_view token() const noexcept { return to_token(id_); }
  std::size_t dimension() const noexcept { return dimension_; }
  double var_min() const noexcept { return var_min_; }
  double var_max() const noexcept { return var_max_; }
  bool truncated() const noexcept { return truncated_; }

  /// Known minimizer of the implemented form within the bounds.
  std::vector<double> reference_point() const;
  double reference_value() const;

  /// Throws InvalidArgument on dimension mismatch.
  Evaluation evaluate(std::span<const double> x) const;
  /// Value only; no dimension or bounds checks. This is the optimizer's hot path.
  double operator()(std::span<const double> x) const noexcept;

  ObjectiveFn objective() const;

 private:
  FunctionId id_;
  std::size_t dimension_;
  double var_min_;
  double var_max_;
  bool truncated_ = false;
};

/// Raw formulas, x.size() is the dimension.
double sphere(std::span<const double> x) noexcept;
double hyper_ellipsoid(std::span<const double> x) noexcept;
double schwefel_1_2(std::span<const double> x) noexcept;
double rosenbrock(std::span<const double> x) noexcept;
double rastrigin(std::span<const double> x) noexcept;
double ackley(std::span<const double> x) noexcept;
double griewank(std::span<const double> x) noexcept;
/// Sums floor(n/4) groups of four.
double powell(std::span<const double> x) noexcept;
double schwefel(std::span<const double> x) noexcept;

struct SuiteResult {
  std::vector<BenchmarkFn> functions;
  std::vector<std::string> warnings;
};

/// All nine functions at `dimension`. Strict mode throws if dimension is not
/// a positive multiple of 4; lenient mode drops f8 with a warning.
SuiteResult list_suite(std::size_t dimension, bool strict = false);

/// One departure of an implemented form from the printed table.
struct Deviation {
  FunctionId id;
  std::string_view printed;
  std::string_view implemented;
  std::string_view reason;
};

std::span<const Deviation> deviation_ledger() noexcept;
/// The ledger as a JSON document.
std::string deviation_ledger_json();

}  // namespace psso::bench
