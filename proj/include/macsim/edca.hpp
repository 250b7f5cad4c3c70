#pragma once

#include <string>

#include "macsim/time.hpp"

namespace macsim {

enum class AccessCategory { kVoice, kVideo, kBestEffort, kBackground };

/// Per-access-category contention parameters. Window sizes are counted
/// in slots: a window of w slots draws backoffs uniform in [0, w-1].
struct EdcaParams {
  AccessCategory ac = AccessCategory::kBestEffort;
  int aifs_slots = 3;
  int cw_min = 16;
  int cw_max = 1024;
  SimTime slot_time = microseconds(9);
  bool eicw_applied = false;

  SimTime aifs_duration(SimTime sifs) const {
    return sifs + static_cast<SimTime>(aifs_slots) * slot_time;
  }
  SimTime window_duration(int w) const {
    return static_cast<SimTime>(w) * slot_time;
  }
};

/// EDCA defaults at the legacy 9us slot. Voice/video windows follow the
/// 4~8 and 8~16 slot ranges; best-effort and background use 16~1024 with
/// AIFSN 3 and 7.
EdcaParams default_edca(AccessCategory ac);

/// Halve the slot time and double every slot-denominated quantity
/// (AIFS slots, CWmin, CWmax), preserving wall-clock durations exactly.
/// Applying the transform twice is an error.
EdcaParams apply_eicw(const EdcaParams& params);

std::string to_string(AccessCategory ac);
AccessCategory access_category_from_string(const std::string& name);

}  // namespace macsim
