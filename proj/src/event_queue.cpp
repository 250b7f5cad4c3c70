#include "macsim/event_queue.hpp"

#include <stdexcept>
#include <string>

namespace macsim {

EventHandle EventQueue::schedule(Event ev) {
  if (ev.fire_at < clock_) {
    throw std::logic_error("EventQueue::schedule: event at t=" +
                           std::to_string(ev.fire_at) +
                           " is in the past (clock=" +
                           std::to_string(clock_) + ")");
  }
  ev.seq = next_seq_++;
  cancelled_.push_back(false);
  heap_.push(ev);
  ++live_;
  return ev.seq;
}

void EventQueue::cancel(EventHandle h) {
  if (h < cancelled_.size() && !cancelled_[h]) {
    cancelled_[h] = true;
    if (live_ > 0) --live_;
  }
}

std::optional<Event> EventQueue::pop_next() {
  while (!heap_.empty()) {
    Event ev = heap_.top();
    if (cancelled_[ev.seq]) {
      heap_.pop();
      continue;
    }
    if (ev.fire_at > horizon_) return std::nullopt;
    heap_.pop();
    cancelled_[ev.seq] = true;  // consumed
    --live_;
    clock_ = ev.fire_at;
    return ev;
  }
  return std::nullopt;
}

}  // namespace macsim
