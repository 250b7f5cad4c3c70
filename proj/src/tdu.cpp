#include "macsim/tdu.hpp"

namespace macsim {

TduSchedule default_tdu_schedule(int n_stations) {
  TduSchedule sched;
  sched.validate();
  int frames = sched.frames_per_cycle();
  sched.owner_of.resize(static_cast<std::size_t>(frames));
  for (int i = 0; i < frames; ++i) {
    sched.owner_of[static_cast<std::size_t>(i)] =
        n_stations > 0 ? i % n_stations : -1;
  }
  return sched;
}

}  // namespace macsim
