#pragma once

#include <cstdint>

namespace maxmin {

namespace detail {
inline std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}
}  // namespace detail

// splitmix64: a Weyl sequence pushed through a strong mixer. Counter-based,
// so substreams derived from (seed, stream_index) are cheap and independent
// of scheduling order; every worker draws from its own stream and the whole
// simulation stays deterministic for a fixed seed.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  static SplitMix64 stream(std::uint64_t seed, std::uint64_t stream_index) {
    return SplitMix64(detail::mix64(seed) ^
                      detail::mix64(stream_index * 0x9E3779B97F4A7C15ULL + 1));
  }

  std::uint64_t next_u64() {
    state_ += 0x9E3779B97F4A7C15ULL;
    return detail::mix64(state_);
  }

  // Uniform on the open interval (0,1), 53-bit resolution. The zero draw is
  // bumped to 2^-54 so inverse-transform sampling never hits a tail exactly.
  double next_unit() {
    const double u = static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    return u > 0.0 ? u : 0x1.0p-54;
  }

 private:
  std::uint64_t state_;
};

}  // namespace maxmin
