#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "macsim/edca.hpp"
#include "macsim/event_queue.hpp"
#include "macsim/medium.hpp"
#include "macsim/metrics.hpp"
#include "macsim/phy.hpp"
#include "macsim/station.hpp"
#include "macsim/tdu.hpp"
#include "macsim/time.hpp"
#include "macsim/traffic.hpp"
#include "macsim/txqueue.hpp"

namespace macsim {

/// Everything one independent run needs. Identical configs (including
/// seed) reproduce identical event sequences bit for bit.
struct RunConfig {
  int n_stations = 5;
  StrategySet strategy;
  int legacy_stations = 0;  // first k stations forced to plain EDCA
  AccessCategory ac = AccessCategory::kBestEffort;
  PhyProfile phy;
  FlowSpec flow;
  int queue_capacity = 100;
  SimTime queue_delay_limit = milliseconds(500);
  TduSchedule tdu;  // owner map; filled with the round-robin default if empty
  EcaMode eca_mode = EcaMode::kSameSlot;
  int retry_limit = 7;
  SimTime duration = seconds(30);
  SimTime warmup = seconds(1);
  std::uint64_t seed = 1;
  bool keep_log = false;
};

/// Single-threaded discrete-event run of one contention scenario.
class Simulation {
 public:
  explicit Simulation(RunConfig cfg);

  RunMetrics run();

  // Observability for tests and traces.
  const std::vector<TxRecord>& medium_log() const { return medium_.log(); }
  int station_counter(int i) const { return st_[static_cast<std::size_t>(i)].counter; }
  const StationState& station_mac(int i) const { return st_[static_cast<std::size_t>(i)].mac; }

 private:
  enum class Mode { kIdle, kContend, kTx, kAwaitAck };

  struct StationRt {
    StationState mac;
    TxQueue queue;
    ArrivalProcess traffic;
    Mode mode = Mode::kIdle;
    std::optional<Packet> frame;  // frame in service (dequeued at win)
    int counter = 0;
    int drawn = 0;
    SimTime aifs_end = -1;  // valid for the current idle period when >= 0
    SimTime tx_time = -1;
    bool saw_burst = false;
    std::optional<EventHandle> ack_timeout;
    std::size_t tx_id = 0;
    SimTime tx_start = -1;

    StationRt(StationState m, TxQueue q, ArrivalProcess t)
        : mac(std::move(m)), queue(std::move(q)), traffic(std::move(t)) {}
  };

  void dispatch(const Event& ev);
  void on_arrival(int i);
  void on_fire(SimTime t);
  void on_tx_end(const Event& ev);
  void on_ack_due(int i, SimTime t);
  void on_ack_timeout(int i);

  void start_round(int i, bool defer_schedule);
  void compute_aifs(int i, SimTime ref);
  void consider_fire(int i);
  void busy_onset(SimTime t);
  void idle_restart(SimTime t);
  void maybe_idle_restart(SimTime t);
  void check_convergence(SimTime t);

  bool engine_idle() const {
    return !medium_.any_active() && !exchange_pending_;
  }
  SimTime now() const { return queue_.now(); }
  bool measured(SimTime t) const { return t >= cfg_.warmup; }

  RunConfig cfg_;
  EventQueue queue_;
  Medium medium_;
  std::vector<StationRt> st_;
  RunMetrics metrics_;

  SimTime idle_start_ = 0;
  std::optional<EventHandle> fire_handle_;
  SimTime fire_time_ = -1;
  bool exchange_pending_ = false;  // delivered data frame awaiting its ACK
  int pending_ack_station_ = -1;
  bool track_convergence_ = false;
  bool finished_ = false;
};

}  // namespace macsim
