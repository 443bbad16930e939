#include "psso/rng.hpp"

#include <cmath>

namespace psso {

namespace {

constexpr std::uint32_t kMul0 = 0xD2511F53u;
constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

inline void mulhilo(std::uint32_t a, std::uint32_t b, std::uint32_t& hi, std::uint32_t& lo) {
  const std::uint64_t product = static_cast<std::uint64_t>(a) * b;
  hi = static_cast<std::uint32_t>(product >> 32);
  lo = static_cast<std::uint32_t>(product);
}

}  // namespace

std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> ctr,
                                        std::array<std::uint32_t, 2> key) noexcept {
  for (int round = 0; round < 10; ++round) {
    if (round > 0) {
      key[0] += kWeyl0;
      key[1] += kWeyl1;
    }
    std::uint32_t hi0, lo0, hi1, lo1;
    mulhilo(kMul0, ctr[0], hi0, lo0);
    mulhilo(kMul1, ctr[2], hi1, lo1);
    ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
  }
  return ctr;
}

double RngStream::uniform_in(double lo, double hi, std::uint32_t particle, std::uint32_t variable,
                             std::uint32_t iteration, StreamTag tag) const noexcept {
  const double value = lo + (hi - lo) * uniform(particle, variable, iteration, tag);
  return value < hi ? value : std::nextafter(hi, lo);
}

void RngStream::tally(StreamTag tag) const noexcept {
  switch (tag) {
    case StreamTag::kBranch:
      counter_->branch.fetch_add(1, std::memory_order_relaxed);
      break;
    case StreamTag::kFresh:
      counter_->fresh.fetch_add(1, std::memory_order_relaxed);
      break;
    case StreamTag::kInit:
      counter_->init.fetch_add(1, std::memory_order_relaxed);
      break;
  }
}

}  // namespace psso
