#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace psso {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on caller-supplied arguments was violated.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// The objective returned NaN or an infinity.
class NonFiniteFitness : public Error {
 public:
  static constexpr std::size_t kNoIteration = static_cast<std::size_t>(-1);

  NonFiniteFitness(std::size_t particle, std::size_t iteration, double value);

  std::size_t particle() const noexcept { return particle_; }
  /// kNoIteration during initialization.
  std::size_t iteration() const noexcept { return iteration_; }
  double value() const noexcept { return value_; }

 private:
  std::size_t particle_;
  std::size_t iteration_;
  double value_;
};

}  // namespace psso
