#pragma once

#include <cstdint>
#include <stdexcept>

#include "macsim/time.hpp"

namespace macsim {

/// Deterministic per-stream random generator (PCG32).
///
/// Identical (seed, stream_id) pairs produce identical draw sequences on
/// every platform, and distinct stream_ids are independent, so adding a
/// station to a scenario never perturbs the draws of the others.
class RngStream {
 public:
  RngStream() : RngStream(0, 0) {}

  RngStream(std::uint64_t seed, std::uint64_t stream_id) {
    // splitmix64 on the seed decorrelates nearby seeds before use.
    state_ = mix(seed);
    inc_ = (mix(stream_id ^ 0x9e3779b97f4a7c15ULL) << 1u) | 1u;
    next_u32();
    state_ += mix(seed + stream_id);
    next_u32();
  }

  std::uint32_t next_u32() {
    std::uint64_t old = state_;
    state_ = old * 6364136223846793005ULL + inc_;
    std::uint32_t xorshifted =
        static_cast<std::uint32_t>(((old >> 18u) ^ old) >> 27u);
    std::uint32_t rot = static_cast<std::uint32_t>(old >> 59u);
    return (xorshifted >> rot) | (xorshifted << ((-rot) & 31u));
  }

  /// Uniform integer in [0, bound). Unbiased via rejection.
  std::uint32_t next_below(std::uint32_t bound) {
    if (bound == 0) throw std::invalid_argument("RngStream: bound must be >= 1");
    std::uint32_t threshold = (-bound) % bound;
    for (;;) {
      std::uint32_t r = next_u32();
      if (r >= threshold) return r % bound;
    }
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double next_double() {
    std::uint64_t hi = next_u32();
    std::uint64_t lo = next_u32();
    std::uint64_t bits = ((hi << 32) | lo) >> 11;
    return static_cast<double>(bits) * 0x1.0p-53;
  }

 private:
  static std::uint64_t mix(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t state_;
  std::uint64_t inc_;
};

/// One slot index uniform in [0, w-1]; consumes one logical draw.
inline int uniform_slot(RngStream& rng, int w) {
  if (w < 1) throw std::invalid_argument("uniform_slot: w must be >= 1");
  return static_cast<int>(rng.next_below(static_cast<std::uint32_t>(w)));
}

}  // namespace macsim
