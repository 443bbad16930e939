#include "psso/benchmarks.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <numbers>
#include <string>

#include <json.hpp>

#include "psso/error.hpp"

namespace psso::bench {

namespace {

struct FunctionInfo {
  FunctionId id;
  std::string_view token;
  std::string_view name;
  double var_min;
  double var_max;
};

constexpr std::array<FunctionInfo, 9> kFunctions{{
    {FunctionId::kF1, "f1", "Sphere", -5.12, 5.12},
    {FunctionId::kF2, "f2", "Hyper-ellipsoid", -5.12, 5.12},
    {FunctionId::kF3, "f3", "Schwefel 1.2", -65.536, 65.536},
    {FunctionId::kF4, "f4", "Rosenbrock", -2.048, 2.048},
    {FunctionId::kF5, "f5", "Rastrigin", -5.12, 5.12},
    {FunctionId::kF6, "f6", "Ackley", -32.768, 32.768},
    {FunctionId::kF7, "f7", "Griewank", -600.0, 600.0},
    {FunctionId::kF8, "f8", "Powell", -4.0, 5.0},
    {FunctionId::kF9, "f9", "Schwefel", -5.12, 5.12},
}};

const FunctionInfo& info(FunctionId id) noexcept {
  return kFunctions[static_cast<std::size_t>(id) - 1];
}

constexpr double kSchwefelConstant = 418.9829;
constexpr double kAckleyA = 20.0;
constexpr double kAckleyB = 0.2;
constexpr double kAckleyC = 2.0 * std::numbers::pi;

constexpr std::array<Deviation, 6> kDeviations{{
    {FunctionId::kF3, "sum_i (sum_{j<=i} x_j^2)", "sum_{i=1..P} (sum_{j=1..i} x_j)^2",
     "printed form is separable, contradicting its classification as non-separable"},
    {FunctionId::kF5, "10P + sum_{i=1..P-1} [x_i^2 - 10(2 pi x_i)]",
     "10P + sum_{i=1..P} [x_i^2 - 10 cos(2 pi x_i)]",
     "cos lost in typesetting; upper limit P restores f(0) = 0"},
    {FunctionId::kF6, "-a exp(-b sqrt((1/P) sum x_i)) - exp((1/P) sum cos(c x_i))",
     "-20 exp(-0.2 sqrt((1/P) sum x_i^2)) - exp((1/P) sum cos(2 pi x_i)) + 20 + e",
     "inner square, additive constants and parameter values restored to the standard form"},
    {FunctionId::kF8, "sum_{i=1..P/4} [..] [..] [..] with misplaced brackets",
     "sum_{k=1..P/4} [(x1+10x2)^2 + 5(x3-x4)^2 + (x2-2x3)^4 + 10(x1-x4)^4]",
     "standard Powell singular function"},
    {FunctionId::kF8, "P/4 groups", "lenient mode: first floor(P/4) groups, remainder ignored",
     "P = 50 is not a multiple of 4; strict mode rejects it"},
    {FunctionId::kF9, "418.9829 P - sum x_i sin(sqrt|x_i|) on [-5.12, 5.12]^P",
     "unchanged, bounds kept at [-5.12, 5.12]^P",
     "kept as printed; the in-bounds minimum is about 20752 at P = 50"},
}};

}  // namespace

std::string_view to_token(FunctionId id) noexcept { return info(id).token; }

FunctionId parse_function_id(std::string_view token) {
  std::string lower(token);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  for (const auto& entry : kFunctions) {
    if (entry.token == lower) return entry.id;
  }
  throw InvalidArgument("unknown function '" + std::string(token) + "' (expected f1..f9)");
}

double sphere(std::span<const double> x) noexcept {
  double sum = 0.0;
  for (double v : x) sum += v * v;
  return sum;
}

double hyper_ellipsoid(std::span<const double> x) noexcept {
  double sum = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) sum += static_cast<double>(i + 1) * x[i] * x[i];
  return sum;
}

double schwefel_1_2(std::span<const double> x) noexcept {
  double sum = 0.0;
  double prefix = 0.0;
  for (double v : x) {
    prefix += v;
    sum += prefix * prefix;
  }
  return sum;
}

double rosenbrock(std::span<const double> x) noexcept {
  double sum = 0.0;
  for (std::size_t i = 0; i + 1 < x.size(); ++i) {
    const double a = x[i + 1] - x[i] * x[i];
    const double b = 1.0 - x[i];
    sum += 100.0 * a * a + b * b;
  }
  return sum;
}

double rastrigin(std::span<const double> x) noexcept {
  double sum = 10.0 * static_cast<double>(x.size());
  for (double v : x) sum += v * v - 10.0 * std::cos(2.0 * std::numbers::pi * v);
  return sum;
}

double ackley(std::span<const double> x) noexcept {
  if (x.empty()) return 0.0;
  double squares = 0.0;
  double cosines = 0.0;
  for (double v : x) {
    squares += v * v;
    cosines += std::cos(kAckleyC * v);
  }
  const double n = static_cast<double>(x.size());
  return -kAckleyA * std::exp(-kAckleyB * std::sqrt(squares / n)) - std::exp(cosines / n) +
         kAckleyA + std::numbers::e;
}

double griewank(std::span<const double> x) noexcept {
  double sum = 0.0;
  double product = 1.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sum += x[i] * x[i];
    product *= std::cos(x[i] / std::sqrt(static_cast<double>(i + 1)));
  }
  return sum / 4000.0 - product + 1.0;
}

double powell(std::span<const double> x) noexcept {
  double sum = 0.0;
  for (std::size_t k = 0; k + 4 <= x.size(); k += 4) {
    const double a = x[k] + 10.0 * x[k + 1];
    const double b = x[k + 2] - x[k + 3];
    const double c = x[k + 1] - 2.0 * x[k + 2];
    const double d = x[k] - x[k + 3];
    sum += a * a + 5.0 * b * b + c * c * c * c + 10.0 * d * d * d * d;
  }
  return sum;
}

double schwefel(std::span<const double> x) noexcept {
  double sum = 0.0;
  for (double v : x) sum += v * std::sin(std::sqrt(std::abs(v)));
  return kSchwefelConstant * static_cast<double>(x.size()) - sum;
}

BenchmarkFn::BenchmarkFn(FunctionId id, std::size_t dimension, bool strict)
    : id_(id), dimension_(dimension), var_min_(info(id).var_min), var_max_(info(id).var_max) {
  if (dimension == 0) throw InvalidArgument("benchmark dimension must be >= 1");
  if (id == FunctionId::kF8) {
    if (dimension < 4) throw InvalidArgument("f8 (Powell) needs dimension >= 4");
    if (dimension % 4 != 0) {
      if (strict) {
        throw InvalidArgument("f8 (Powell) needs a dimension divisible by 4 in strict mode (got " +
                              std::to_string(dimension) + ")");
      }
      truncated_ = true;
    }
  }
}

std::string_view BenchmarkFn::name() const noexcept { return info(id_).name; }

std::vector<double> BenchmarkFn::reference_point() const {
  switch (id_) {
    case FunctionId::kF4:
      return std::vector<double>(dimension_, 1.0);
    case FunctionId::kF9:
      // x sin(sqrt x) is increasing on [0, 5.12], so the box corner minimizes.
      return std::vector<double>(dimension_, var_max_);
    default:
      return std::vector<double>(dimension_, 0.0);
  }
}

double BenchmarkFn::reference_value() const {
  if (id_ == FunctionId::kF9) {
    const double term = var_max_ * std::sin(std::sqrt(var_max_));
    return static_cast<double>(dimension_) * (kSchwefelConstant - term);
  }
  return 0.0;
}

double BenchmarkFn::operator()(std::span<const double> x) const noexcept {
  switch (id_) {
    case FunctionId::kF1:
      return sphere(x);
    case FunctionId::kF2:
      return hyper_ellipsoid(x);
    case FunctionId::kF3:
      return schwefel_1_2(x);
    case FunctionId::kF4:
      return rosenbrock(x);
    case FunctionId::kF5:
      return rastrigin(x);
    case FunctionId::kF6:
      return ackley(x);
    case FunctionId::kF7:
      return griewank(x);
    case FunctionId::kF8:
      return powell(x);
    case FunctionId::kF9:
      return schwefel(x);
  }
  return 0.0;
}

Evaluation BenchmarkFn::evaluate(std::span<const double> x) const {
  if (x.size() != dimension_) {
    throw InvalidArgument(std::string(token()) + ": expected " + std::to_string(dimension_) +
                          " coordinates, got " + std::to_string(x.size()));
  }
  Evaluation out;
  out.value = (*this)(x);
  out.out_of_bounds =
      std::any_of(x.begin(), x.end(), [&](double v) { return v < var_min_ || v > var_max_; });
  return out;
}

ObjectiveFn BenchmarkFn::objective() const {
  return [fn = *this](std::span<const double> x) { return fn(x); };
}

SuiteResult list_suite(std::size_t dimension, bool strict) {
  if (dimension == 0) throw InvalidArgument("suite dimension must be >= 1");
  const bool powell_ok = dimension >= 4 && dimension % 4 == 0;
  if (strict && !powell_ok) {
    throw InvalidArgument("suite dimension " + std::to_string(dimension) +
                          " is not a positive multiple of 4, required by f8 (Powell)");
  }
  SuiteResult out;
  for (const auto& entry : kFunctions) {
    if (entry.id == FunctionId::kF8 && !powell_ok) {
      out.warnings.push_back("f8 (Powell) omitted: dimension " + std::to_string(dimension) +
                             " is not a multiple of 4");
      continue;
    }
    out.functions.emplace_back(entry.id, dimension, true);
  }
  return out;
}

std::span<const Deviation> deviation_ledger() noexcept { return kDeviations; }

std::string deviation_ledger_json() {
  nlohmann::json doc = nlohmann::json::array();
  for (const auto& d : kDeviations) {
    doc.push_back({{"function", to_token(d.id)},
                   {"name", info(d.id).name},
                   {"printed", d.printed},
                   {"implemented", d.implemented},
                   {"reason", d.reason}});
  }
  return doc.dump(2);
}

}  // namespace psso::bench
