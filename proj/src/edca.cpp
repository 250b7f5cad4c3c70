#include "macsim/edca.hpp"

#include <stdexcept>

namespace macsim {

EdcaParams default_edca(AccessCategory ac) {
  EdcaParams p;
  p.ac = ac;
  p.slot_time = microseconds(9);
  switch (ac) {
    case AccessCategory::kVoice:
      p.aifs_slots = 2;
      p.cw_min = 4;
      p.cw_max = 8;
      break;
    case AccessCategory::kVideo:
      p.aifs_slots = 2;
      p.cw_min = 8;
      p.cw_max = 16;
      break;
    case AccessCategory::kBestEffort:
      p.aifs_slots = 3;
      p.cw_min = 16;
      p.cw_max = 1024;
      break;
    case AccessCategory::kBackground:
      p.aifs_slots = 7;
      p.cw_min = 16;
      p.cw_max = 1024;
      break;
  }
  return p;
}

EdcaParams apply_eicw(const EdcaParams& params) {
  if (params.eicw_applied) {
    throw std::logic_error("apply_eicw: transform already applied");
  }
  if (params.slot_time % 2 != 0) {
    throw std::logic_error("apply_eicw: slot time not halvable exactly");
  }
  EdcaParams out = params;
  out.slot_time = params.slot_time / 2;
  out.aifs_slots = params.aifs_slots * 2;
  out.cw_min = params.cw_min * 2;
  out.cw_max = params.cw_max * 2;
  out.eicw_applied = true;
  return out;
}

std::string to_string(AccessCategory ac) {
  switch (ac) {
    case AccessCategory::kVoice: return "voice";
    case AccessCategory::kVideo: return "video";
    case AccessCategory::kBestEffort: return "best_effort";
    case AccessCategory::kBackground: return "background";
  }
  return "best_effort";
}

AccessCategory access_category_from_string(const std::string& name) {
  if (name == "voice") return AccessCategory::kVoice;
  if (name == "video") return AccessCategory::kVideo;
  if (name == "best_effort") return AccessCategory::kBestEffort;
  if (name == "background") return AccessCategory::kBackground;
  throw std::invalid_argument("unknown access category: " + name);
}

}  // namespace macsim
