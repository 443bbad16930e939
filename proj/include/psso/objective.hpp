#pragma once

#include <functional>
#include <span>

namespace psso {

/// Fitness to minimize. Must be pure and safe to call concurrently.
using ObjectiveFn = std::function<double(std::span<const double>)>;

}  // namespace psso
