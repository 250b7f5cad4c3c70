#include "macsim/station.hpp"

#include <stdexcept>

namespace macsim {

int StationState::draw_backoff() {
  if (strategy_.eca && last_success_ && eca_slot_.has_value()) {
    if (eca_mode_ == EcaMode::kSameSlot) return *eca_slot_;
    return (params_.cw_min + 1) / 2 - 1;
  }
  return uniform_slot(rng_, cw_current_);
}

void StationState::on_tx_success(int winning_slot) {
  cw_current_ = params_.cw_min;
  retry_count_ = 0;
  last_success_ = true;
  if (strategy_.eca) eca_slot_ = winning_slot;
}

bool StationState::on_tx_failure() {
  cw_current_ = std::min(cw_current_ * 2, params_.cw_max);
  ++retry_count_;
  last_success_ = false;
  eca_slot_.reset();
  if (retry_count_ >= retry_limit_) {
    // Frame abandoned: contention for the next one starts fresh.
    retry_count_ = 0;
    cw_current_ = params_.cw_min;
    return true;
  }
  return false;
}

std::string to_string(const StrategySet& s) {
  if (!s.eicw && !s.eca && !s.tdu) return "legacy";
  std::string out;
  auto append = [&out](const char* name) {
    if (!out.empty()) out += '+';
    out += name;
  };
  if (s.eicw) append("eicw");
  if (s.eca) append("eca");
  if (s.tdu) append("tdu");
  return out;
}

StrategySet strategy_from_string(const std::string& name) {
  StrategySet s;
  if (name == "legacy") return s;
  std::size_t pos = 0;
  while (pos < name.size()) {
    std::size_t plus = name.find('+', pos);
    std::string part = name.substr(
        pos, plus == std::string::npos ? std::string::npos : plus - pos);
    if (part == "eicw") {
      s.eicw = true;
    } else if (part == "eca") {
      s.eca = true;
    } else if (part == "tdu") {
      s.tdu = true;
    } else {
      throw std::invalid_argument("unknown protocol: " + part);
    }
    if (plus == std::string::npos) break;
    pos = plus + 1;
  }
  return s;
}

}  // namespace macsim
