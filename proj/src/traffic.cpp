#include "macsim/traffic.hpp"

#include <cmath>
#include <stdexcept>

namespace macsim {

ArrivalProcess::ArrivalProcess(FlowSpec spec, RngStream rng)
    : spec_(spec), rng_(rng) {
  if (spec_.offered_bps <= 0) {
    throw std::invalid_argument("traffic: offered rate must be > 0");
  }
  if (spec_.packet_bytes < 64) {
    throw std::invalid_argument("traffic: packet size must be >= 64 bytes");
  }
  double bits = static_cast<double>(packet_bits());
  base_interval_ =
      static_cast<SimTime>(std::llround(bits * 1e9 / spec_.offered_bps));
  if (base_interval_ < 1) base_interval_ = 1;
}

SimTime ArrivalProcess::draw_interval() {
  // +-10% uniform jitter around the nominal spacing, in whole ns.
  double u = rng_.next_double();
  double factor = 0.9 + 0.2 * u;
  auto jittered = static_cast<SimTime>(
      std::llround(static_cast<double>(base_interval_) * factor));
  return jittered < 1 ? 1 : jittered;
}

SimTime ArrivalProcess::next_arrival() {
  clock_ += draw_interval();
  if (spec_.kind == FlowKind::kWebLikeOnOff && spec_.mean_off_s > 0) {
    while (clock_ > on_until_) {
      double on = -spec_.mean_on_s * std::log(1.0 - rng_.next_double());
      double off = -spec_.mean_off_s * std::log(1.0 - rng_.next_double());
      SimTime on_len = static_cast<SimTime>(std::llround(on * 1e9));
      SimTime off_len = static_cast<SimTime>(std::llround(off * 1e9));
      if (on_len < 1) on_len = 1;
      // Arrivals falling into an off period slide past it.
      SimTime gate_start = on_until_;
      on_until_ = gate_start + on_len;
      if (clock_ > on_until_) {
        clock_ += off_len;
        on_until_ += off_len;
      }
    }
  }
  return clock_;
}

FlowKind flow_kind_from_string(const std::string& name) {
  if (name == "cbr" || name == "saturated-cbr") return FlowKind::kSaturatedCbr;
  if (name == "web" || name == "web-like-onoff") return FlowKind::kWebLikeOnOff;
  throw std::invalid_argument("unknown traffic kind: " + name);
}

std::string to_string(FlowKind kind) {
  return kind == FlowKind::kSaturatedCbr ? "saturated-cbr" : "web-like-onoff";
}

}  // namespace macsim
