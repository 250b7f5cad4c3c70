#pragma once

#include <cstdint>
#include <vector>

#include "macsim/phy.hpp"
#include "macsim/time.hpp"

namespace macsim {

enum class TxOutcome { kPending, kDelivered, kCollided };

struct TxRecord {
  int station_id = -1;  // -1 marks an ACK sent by the receiver side
  SimTime start = 0;
  SimTime end = 0;
  std::int64_t payload_bits = 0;
  bool is_ack = false;
  TxOutcome outcome = TxOutcome::kPending;
};

/// Single shared collision-domain channel.
///
/// Transmissions occupy half-open intervals [start, end). Any temporal
/// overlap destroys all frames involved (no capture effect); sensing is
/// perfect with zero propagation delay.
class Medium {
 public:
  explicit Medium(PhyProfile phy, bool keep_log = false)
      : phy_(phy), keep_log_(keep_log) {}

  const PhyProfile& phy() const { return phy_; }

  /// Busy iff at least one transmission overlaps `at`.
  bool sense(SimTime at) const {
    for (const auto& tx : active_) {
      if (tx.rec.start <= at && at < tx.rec.end) return true;
    }
    return false;
  }

  bool idle(SimTime at) const { return !sense(at); }
  bool any_active() const { return !active_.empty(); }

  /// Register a transmission starting at `at`. The medium never refuses;
  /// collisions are consequences. Returns the record id used by end_tx.
  std::size_t begin_tx(int station_id, std::int64_t payload_bits, SimTime at,
                       bool is_ack = false);

  /// Finish the transmission at its end instant and return the resolved
  /// record. Outcome is final here: any colliding frame started earlier.
  TxRecord end_tx(std::size_t id, SimTime now);

  const std::vector<TxRecord>& log() const { return log_; }

 private:
  struct Active {
    TxRecord rec;
    std::size_t id;
    bool collided;
  };

  PhyProfile phy_;
  bool keep_log_;
  std::size_t next_id_ = 0;
  std::vector<Active> active_;
  std::vector<TxRecord> log_;
};

/// Brute-force check over a complete run log: a transmission is delivered
/// iff its interval intersects no other transmission interval. Used by
/// tests to audit the online resolution.
bool log_outcomes_consistent(const std::vector<TxRecord>& log);

}  // namespace macsim
