#pragma once

#include <cstdint>
#include <string>

#include "macsim/rng.hpp"
#include "macsim/time.hpp"

namespace macsim {

enum class FlowKind { kSaturatedCbr, kWebLikeOnOff };

/// Per-station offered load. The default rate is set well above a
/// station's fair share of the channel so dense scenarios saturate.
struct FlowSpec {
  FlowKind kind = FlowKind::kSaturatedCbr;
  std::int64_t packet_bytes = 1000;
  double offered_bps = 8e6;
  // web-like on/off gating of the cbr stream (exponential periods)
  double mean_on_s = 0.05;
  double mean_off_s = 0.05;
};

/// Arrival-event generator for one station's flow. CBR inter-arrivals
/// are packet_bits/offered_rate jittered +-10% uniformly; the web-like
/// variant gates the same stream with exponential on/off periods
/// (off rate 0 degenerates to plain cbr).
class ArrivalProcess {
 public:
  ArrivalProcess(FlowSpec spec, RngStream rng);

  /// Time of the next packet arrival strictly after the previous one.
  SimTime next_arrival();

  std::int64_t packet_bits() const { return spec_.packet_bytes * 8; }

 private:
  SimTime draw_interval();

  FlowSpec spec_;
  RngStream rng_;
  SimTime base_interval_;
  SimTime clock_ = 0;
  SimTime on_until_ = 0;
};

FlowKind flow_kind_from_string(const std::string& name);
std::string to_string(FlowKind kind);

}  // namespace macsim
