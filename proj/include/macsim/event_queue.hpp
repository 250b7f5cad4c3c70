#pragma once

#include <cstdint>
#include <optional>
#include <queue>
#include <vector>

#include "macsim/time.hpp"

namespace macsim {

enum class EventKind {
  kBackoffSlotBoundary,
  kTxEnd,
  kAckDue,
  kAckTimeout,
  kPacketArrival,
  kTfBoundary,
  kMetricsSample,
};

struct Event {
  SimTime fire_at = 0;
  std::uint64_t seq = 0;  // insertion order, breaks fire_at ties
  EventKind kind = EventKind::kMetricsSample;
  int station = -1;
  std::int64_t payload = 0;
};

using EventHandle = std::uint64_t;

/// Ordered event queue with a virtual clock.
///
/// Events fire in (fire_at, seq) order; equal timestamps resolve in
/// insertion order. Cancellation is lazy: cancelled handles become
/// tombstones skipped by pop_next().
class EventQueue {
 public:
  explicit EventQueue(SimTime horizon = INT64_MAX) : horizon_(horizon) {}

  SimTime now() const { return clock_; }
  SimTime horizon() const { return horizon_; }
  void set_horizon(SimTime h) { horizon_ = h; }

  EventHandle schedule(Event ev);
  void cancel(EventHandle h);
  bool empty() const { return live_ == 0; }

  /// Earliest event by (fire_at, seq), advancing the clock; nullopt at
  /// end of simulation (queue empty or next event beyond horizon).
  std::optional<Event> pop_next();

 private:
  struct Later {
    bool operator()(const Event& a, const Event& b) const {
      if (a.fire_at != b.fire_at) return a.fire_at > b.fire_at;
      return a.seq > b.seq;
    }
  };

  SimTime clock_ = 0;
  SimTime horizon_;
  std::uint64_t next_seq_ = 0;
  std::size_t live_ = 0;
  std::priority_queue<Event, std::vector<Event>, Later> heap_;
  std::vector<bool> cancelled_;
};

}  // namespace macsim
