#pragma once

#include <optional>
#include <string>

#include "macsim/edca.hpp"
#include "macsim/rng.hpp"
#include "macsim/tdu.hpp"
#include "macsim/time.hpp"

namespace macsim {

/// Contention-avoidance strategies a station can stack on top of the
/// legacy EDCA backoff. eicw transforms the EDCA parameters, eca changes
/// the post-success backoff, tdu changes the effective AIFS.
struct StrategySet {
  bool eicw = false;
  bool eca = false;
  bool tdu = false;

  bool operator==(const StrategySet&) const = default;
};

std::string to_string(const StrategySet& s);
StrategySet strategy_from_string(const std::string& name);

/// How an ECA station picks its post-success backoff.
///   kSameSlot   reuse the slot number that won the previous round
///   kFixedHalf  the literature's fixed ceil(cw_min/2)-1 value
enum class EcaMode { kSameSlot, kFixedHalf };

/// One contender's MAC state. The discrete-event engine owns instances;
/// the operations here are pure state transitions so they can be tested
/// in isolation.
class StationState {
 public:
  StationState(int id, EdcaParams params, StrategySet strategy, RngStream rng,
               int retry_limit = 7, EcaMode eca_mode = EcaMode::kSameSlot)
      : id_(id),
        params_(strategy.eicw ? apply_eicw(params) : params),
        strategy_(strategy),
        rng_(rng),
        retry_limit_(retry_limit),
        eca_mode_(eca_mode),
        cw_current_(params_.cw_min) {}

  int id() const { return id_; }
  const EdcaParams& params() const { return params_; }
  const StrategySet& strategy() const { return strategy_; }
  int cw_current() const { return cw_current_; }
  int retry_count() const { return retry_count_; }
  std::optional<int> eca_slot() const { return eca_slot_; }
  bool last_attempt_succeeded() const { return last_success_; }
  bool has_transmitted() const { return attempts_ > 0; }
  RngStream& rng() { return rng_; }

  /// Backoff for a new contention round.
  ///  - legacy: uniform in [0, cw_current-1]
  ///  - eca after a success: the reserved slot number (same-slot mode)
  ///    or the fixed deterministic value (fixed-half mode)
  ///  - eca first access / after a collision: uniform under legacy rules
  int draw_backoff();

  /// ACK received: window back to minimum; ECA keeps the slot that won.
  /// `winning_slot` is the slot number of the round just won.
  void on_tx_success(int winning_slot);

  /// ACK timeout: exponential window growth, bounded failure count.
  /// Returns true if the frame must be dropped (retry limit reached);
  /// the caller counts the retry-drop and fetches the next frame.
  bool on_tx_failure();

  void note_attempt() { ++attempts_; }

  /// AIFS in slots at time `at`: the TDu owner gets the shortest AIFS,
  /// everyone else keeps the per-category value.
  int effective_aifs(SimTime at, const TduSchedule* sched) const {
    if (strategy_.tdu && sched != nullptr) {
      auto owner = tdu_owner(at, *sched);
      if (owner && *owner == id_) return sched->owner_aifs_slots;
    }
    return params_.aifs_slots;
  }

  /// ECA stations count busy bursts as elapsed slot positions, keeping
  /// every contender's countdown in lockstep on a shared slot grid; that
  /// is what turns "reuse the winning slot number" into a repeating
  /// collision-free round once all reserved numbers differ.
  bool counts_busy_bursts() const {
    return strategy_.eca && eca_mode_ == EcaMode::kSameSlot;
  }

  /// Countdown value realizing the draw for the engine's slot grid. For
  /// a same-slot reuse the next transmission lands in the same slot of
  /// the *next* round, i.e. a full window of grid positions away.
  int countdown_for_draw(int drawn) const {
    if (strategy_.eca && eca_mode_ == EcaMode::kSameSlot && last_success_) {
      return params_.cw_min;
    }
    return drawn;
  }

 private:
  int id_;
  EdcaParams params_;
  StrategySet strategy_;
  RngStream rng_;
  int retry_limit_;
  EcaMode eca_mode_;

  int cw_current_;
  int retry_count_ = 0;
  std::optional<int> eca_slot_;
  bool last_success_ = false;
  long attempts_ = 0;
};

}  // namespace macsim
