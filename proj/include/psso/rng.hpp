#pragma once

#include <array>
#include <atomic>
#include <cstdint>

namespace psso {

/// Which independent sub-stream a deviate belongs to.
enum class StreamTag : std::uint32_t { kBranch = 0, kFresh = 1, kInit = 2 };

/// Philox4x32-10 block function (Salmon et al., SC'11).
std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> counter,
                                        std::array<std::uint32_t, 2> key) noexcept;

/// Per-tag draw tallies, attached to an RngStream only for instrumentation.
struct DrawCounter {
  std::atomic<std::uint64_t> branch{0};
  std::atomic<std::uint64_t> fresh{0};
  std::atomic<std::uint64_t> init{0};
};

/// Counter-based uniform source: every deviate is a pure function of
/// (seed, particle, variable, iteration, tag). There is no sequential state,
/// so any number of workers can draw in any order and get the same values.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) noexcept : seed_(seed) {}

  std::uint64_t seed() const noexcept { return seed_; }

  /// Uniform in [0, 1) with 53 random bits.
  double uniform(std::uint32_t particle, std::uint32_t variable,
                 std::uint32_t iteration, StreamTag tag) const noexcept {
    if (counter_ != nullptr) tally(tag);
    const auto block = philox4x32({particle, variable, iteration, static_cast<std::uint32_t>(tag)},
                                  {static_cast<std::uint32_t>(seed_),
                                   static_cast<std::uint32_t>(seed_ >> 32)});
    const std::uint64_t bits =
        (static_cast<std::uint64_t>(block[0]) << 21) | (static_cast<std::uint64_t>(block[1]) >> 11);
    return static_cast<double>(bits) * 0x1.0p-53;
  }

  /// Uniform in [lo, hi). Never returns hi even when rounding would.
  double uniform_in(double lo, double hi, std::uint32_t particle, std::uint32_t variable,
                    std::uint32_t iteration, StreamTag tag) const noexcept;

  /// Attach a tally; pass nullptr to detach. The counter must outlive the stream.
  void attach_counter(DrawCounter* counter) noexcept { counter_ = counter; }

 private:
  void tally(StreamTag tag) const noexcept;

  std::uint64_t seed_;
  DrawCounter* counter_ = nullptr;
};

}  // namespace psso
