#include "psso/params.hpp"

#include <cmath>
#include <sstream>

#include "psso/error.hpp"

namespace psso {

NonFiniteFitness::NonFiniteFitness(std::size_t particle, std::size_t iteration, double value)
    : Error([&] {
        std::ostringstream msg;
        msg << "non-finite fitness " << value << " at particle " << particle;
        if (iteration == kNoIteration) {
          msg << " during initialization";
        } else {
          msg << ", iteration " << iteration;
        }
        return msg.str();
      }()),
      particle_(particle),
      iteration_(iteration),
      value_(value) {}

std::string check_thresholds(double cw, double cp, double cg) {
  if (!std::isfinite(cw) || !std::isfinite(cp) || !std::isfinite(cg)) {
    return "thresholds must be finite";
  }
  if (!(0.0 <= cw && cw <= cp && cp <= cg && cg <= 1.0)) {
    std::ostringstream msg;
    msg << "thresholds must satisfy 0 <= cw <= cp <= cg <= 1 (got cw=" << cw << ", cp=" << cp
        << ", cg=" << cg << ")";
    return msg.str();
  }
  return {};
}

void SsoParams::validate() const {
  if (auto problem = check_thresholds(cw, cp, cg); !problem.empty()) {
    throw InvalidArgument(problem);
  }
  if (!std::isfinite(var_min) || !std::isfinite(var_max) || !(var_min < var_max)) {
    std::ostringstream msg;
    msg << "bounds must satisfy var_min < var_max (got [" << var_min << ", " << var_max << "])";
    throw InvalidArgument(msg.str());
  }
  if (nsol < 1) throw InvalidArgument("nsol must be >= 1");
  if (nvar < 1) throw InvalidArgument("nvar must be >= 1");
  if (niter < 1) throw InvalidArgument("niter must be >= 1");
  // Keys of the counter-based RNG are 32-bit.
  constexpr std::size_t kMaxIndex = 0xFFFFFFFFu;
  if (nsol > kMaxIndex || nvar > kMaxIndex || niter > kMaxIndex) {
    throw InvalidArgument("nsol, nvar and niter must each fit in 32 bits");
  }
}

}  // namespace psso
