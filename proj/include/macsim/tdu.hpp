#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "macsim/time.hpp"

namespace macsim {

/// Time-cycle / time-frame ownership map for TDuCSMA. Each time frame
/// within the cycle is owned by at most one station; the owner contends
/// with the shortest AIFS while everyone else keeps normal contention.
struct TduSchedule {
  SimTime tc_duration = milliseconds(100);
  SimTime tf_duration = milliseconds(10);
  std::vector<int> owner_of;  // per TF index; -1 = unassigned
  int owner_aifs_slots = 1;

  int frames_per_cycle() const {
    return static_cast<int>(tc_duration / tf_duration);
  }

  void validate() const {
    if (tf_duration <= 0 || tc_duration <= 0) {
      throw std::invalid_argument("tdu: tc and tf durations must be > 0");
    }
    if (tc_duration % tf_duration != 0) {
      throw std::invalid_argument("tdu: tc must be an exact multiple of tf");
    }
  }
};

/// Round-robin default map: TF i -> station (i mod n_stations).
TduSchedule default_tdu_schedule(int n_stations);

/// Owner of the time frame containing `at`, if any.
inline std::optional<int> tdu_owner(SimTime at, const TduSchedule& sched) {
  if (sched.owner_of.empty()) return std::nullopt;
  SimTime in_cycle = at % sched.tc_duration;
  auto index = static_cast<std::size_t>(in_cycle / sched.tf_duration);
  if (index >= sched.owner_of.size()) return std::nullopt;
  int owner = sched.owner_of[index];
  if (owner < 0) return std::nullopt;
  return owner;
}

}  // namespace macsim
