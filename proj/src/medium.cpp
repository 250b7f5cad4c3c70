#include "macsim/medium.hpp"

#include <stdexcept>

namespace macsim {

std::size_t Medium::begin_tx(int station_id, std::int64_t payload_bits,
                             SimTime at, bool is_ack) {
  TxRecord rec;
  rec.station_id = station_id;
  rec.start = at;
  rec.payload_bits = payload_bits;
  rec.is_ack = is_ack;
  rec.end = at + (is_ack ? phy_.ack_duration : phy_.tx_duration(payload_bits));

  Active entry{rec, next_id_++, false};
  // Pairwise marking at start time is equivalent to interval
  // intersection: every overlapping pair has a later-starting member
  // whose start lies inside the other.
  for (auto& other : active_) {
    if (at < other.rec.end) {
      other.collided = true;
      entry.collided = true;
    }
  }
  active_.push_back(entry);
  return entry.id;
}

TxRecord Medium::end_tx(std::size_t id, SimTime now) {
  for (std::size_t i = 0; i < active_.size(); ++i) {
    if (active_[i].id != id) continue;
    Active entry = active_[i];
    active_.erase(active_.begin() + static_cast<std::ptrdiff_t>(i));
    if (entry.rec.end != now) {
      throw std::logic_error("Medium::end_tx called away from end instant");
    }
    entry.rec.outcome =
        entry.collided ? TxOutcome::kCollided : TxOutcome::kDelivered;
    if (keep_log_) log_.push_back(entry.rec);
    return entry.rec;
  }
  throw std::logic_error("Medium::end_tx: unknown transmission id");
}

bool log_outcomes_consistent(const std::vector<TxRecord>& log) {
  for (std::size_t i = 0; i < log.size(); ++i) {
    bool overlaps = false;
    for (std::size_t j = 0; j < log.size(); ++j) {
      if (i == j) continue;
      if (log[i].start < log[j].end && log[j].start < log[i].end) {
        overlaps = true;
        break;
      }
    }
    TxOutcome expected =
        overlaps ? TxOutcome::kCollided : TxOutcome::kDelivered;
    if (log[i].outcome != expected) return false;
  }
  return true;
}

}  // namespace macsim
