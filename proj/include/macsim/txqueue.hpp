#pragma once

#include <cstdint>
#include <deque>
#include <optional>

#include "macsim/time.hpp"

namespace macsim {

struct Packet {
  SimTime enqueue_time = 0;
  std::int64_t payload_bits = 0;
};

/// Bounded FIFO transmit queue with a per-packet delay limit.
///
/// Entries that overstay delay_limit are discarded lazily when the MAC
/// next evaluates the head, which gives the same observable drops as
/// per-packet timers with far fewer events.
class TxQueue {
 public:
  TxQueue(int capacity, SimTime delay_limit)
      : capacity_(capacity), delay_limit_(delay_limit) {}

  bool enqueue(Packet pkt, SimTime at) {
    if (static_cast<int>(entries_.size()) >= capacity_) {
      ++overflow_drops_;
      return false;
    }
    pkt.enqueue_time = at;
    entries_.push_back(pkt);
    return true;
  }

  /// Discards every entry older than delay_limit (each counted as a
  /// timeout drop), then removes and returns the surviving head.
  std::optional<Packet> dequeue_head(SimTime at) {
    while (!entries_.empty() &&
           at - entries_.front().enqueue_time > delay_limit_) {
      entries_.pop_front();
      ++timeout_drops_;
    }
    if (entries_.empty()) return std::nullopt;
    Packet head = entries_.front();
    entries_.pop_front();
    return head;
  }

  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  std::int64_t timeout_drops() const { return timeout_drops_; }
  std::int64_t overflow_drops() const { return overflow_drops_; }

 private:
  int capacity_;
  SimTime delay_limit_;
  std::deque<Packet> entries_;
  std::int64_t timeout_drops_ = 0;
  std::int64_t overflow_drops_ = 0;
};

}  // namespace macsim
