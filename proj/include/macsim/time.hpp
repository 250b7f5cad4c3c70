#pragma once

#include <cstdint>

namespace macsim {

// Simulation time in integer nanoseconds. All protocol durations (slot,
// SIFS, AIFS, TF, TC) are exact multiples of 1 ns, so half-slot EICW
// timing (4.5us) and long horizons stay exact.
using SimTime = std::int64_t;

constexpr SimTime kNanosecond = 1;
constexpr SimTime kMicrosecond = 1000;
constexpr SimTime kMillisecond = 1000 * kMicrosecond;
constexpr SimTime kSecond = 1000 * kMillisecond;

constexpr SimTime microseconds(std::int64_t us) { return us * kMicrosecond; }
constexpr SimTime milliseconds(std::int64_t ms) { return ms * kMillisecond; }
constexpr SimTime seconds(std::int64_t s) { return s * kSecond; }

constexpr double to_seconds(SimTime t) { return static_cast<double>(t) / 1e9; }

}  // namespace macsim
