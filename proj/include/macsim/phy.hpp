#pragma once

#include <cstdint>

#include "macsim/time.hpp"

namespace macsim {

/// Channel timing and rate parameters shared by every station in the
/// collision domain. Defaults are OFDM-style values; the paper does not
/// pin rate or frame overhead, so these are documented choices.
struct PhyProfile {
  SimTime slot_time = microseconds(9);
  SimTime sifs = microseconds(16);
  std::int64_t data_rate_bps = 65'000'000;
  SimTime ack_duration = microseconds(28);
  std::int64_t header_overhead_bits = 320;

  /// Airtime of a frame: header + payload scaled by rate, rounded up.
  SimTime tx_duration(std::int64_t payload_bits) const {
    std::int64_t bits = header_overhead_bits + payload_bits;
    // ceil(bits * 1e9 / rate)
    return (bits * kSecond + data_rate_bps - 1) / data_rate_bps;
  }
};

}  // namespace macsim
