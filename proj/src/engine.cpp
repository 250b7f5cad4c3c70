#include "macsim/engine.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace macsim {

namespace {

StrategySet station_strategy(const RunConfig& cfg, int i) {
  if (i < cfg.legacy_stations) return StrategySet{};
  return cfg.strategy;
}

}  // namespace

Simulation::Simulation(RunConfig cfg)
    : cfg_(cfg), queue_(cfg.duration), medium_(cfg.phy, cfg.keep_log) {
  if (cfg_.n_stations < 1) {
    throw std::invalid_argument("simulation: need at least one station");
  }
  if (cfg_.warmup >= cfg_.duration) {
    throw std::invalid_argument("simulation: warmup must be below duration");
  }
  if (cfg_.strategy.tdu) {
    if (cfg_.tdu.owner_of.empty()) {
      cfg_.tdu = default_tdu_schedule(cfg_.n_stations);
    }
    cfg_.tdu.validate();
    for (int owner : cfg_.tdu.owner_of) {
      if (owner >= cfg_.n_stations) {
        throw std::invalid_argument("tdu.owners: station " +
                                    std::to_string(owner) + " does not exist");
      }
    }
  }

  EdcaParams base = default_edca(cfg_.ac);
  base.slot_time = cfg_.phy.slot_time;

  st_.reserve(static_cast<std::size_t>(cfg_.n_stations));
  for (int i = 0; i < cfg_.n_stations; ++i) {
    StationState mac(i, base, station_strategy(cfg_, i),
                     RngStream(cfg_.seed, 2 * static_cast<std::uint64_t>(i)),
                     cfg_.retry_limit, cfg_.eca_mode);
    TxQueue q(cfg_.queue_capacity, cfg_.queue_delay_limit);
    ArrivalProcess traffic(
        cfg_.flow,
        RngStream(cfg_.seed, 2 * static_cast<std::uint64_t>(i) + 1));
    st_.emplace_back(std::move(mac), std::move(q), std::move(traffic));
  }

  // Convergence is observable only for a homogeneous deterministic-
  // backoff population (no TDu churn, no legacy stations).
  track_convergence_ =
      cfg_.strategy.eca && !cfg_.strategy.tdu && cfg_.legacy_stations == 0;

  metrics_.sim_duration = cfg_.duration;
  metrics_.warmup = cfg_.warmup;
}

RunMetrics Simulation::run() {
  if (finished_) throw std::logic_error("simulation: run() called twice");
  finished_ = true;

  for (int i = 0; i < cfg_.n_stations; ++i) {
    auto& s = st_[static_cast<std::size_t>(i)];
    Event ev;
    ev.kind = EventKind::kPacketArrival;
    ev.station = i;
    ev.fire_at = s.traffic.next_arrival();
    if (ev.fire_at <= cfg_.duration) queue_.schedule(ev);
  }

  while (auto ev = queue_.pop_next()) dispatch(*ev);

  for (auto& s : st_) {
    metrics_.total_timeout_drops += s.queue.timeout_drops();
    metrics_.total_overflow_drops += s.queue.overflow_drops();
    metrics_.end_in_queue += static_cast<std::int64_t>(s.queue.size());
    if (s.frame) ++metrics_.end_in_flight;
    if (s.mode == Mode::kTx && measured(s.tx_start)) {
      ++metrics_.end_unresolved_tx;
    }
  }
  return metrics_;
}

void Simulation::dispatch(const Event& ev) {
  switch (ev.kind) {
    case EventKind::kPacketArrival:
      on_arrival(ev.station);
      break;
    case EventKind::kBackoffSlotBoundary:
      on_fire(ev.fire_at);
      break;
    case EventKind::kTxEnd:
      on_tx_end(ev);
      break;
    case EventKind::kAckDue:
      on_ack_due(ev.station, ev.fire_at);
      break;
    case EventKind::kAckTimeout:
      on_ack_timeout(ev.station);
      break;
    case EventKind::kTfBoundary:
    case EventKind::kMetricsSample:
      break;
  }
}

void Simulation::on_arrival(int i) {
  auto& s = st_[static_cast<std::size_t>(i)];
  SimTime t = now();

  Packet pkt;
  pkt.payload_bits = s.traffic.packet_bits();
  ++metrics_.total_generated;
  if (measured(t)) ++metrics_.generated;
  if (!s.queue.enqueue(pkt, t) && measured(t)) ++metrics_.overflow_drops;

  if (s.mode == Mode::kIdle) start_round(i, false);

  Event next;
  next.kind = EventKind::kPacketArrival;
  next.station = i;
  next.fire_at = s.traffic.next_arrival();
  if (next.fire_at <= cfg_.duration) queue_.schedule(next);
}

void Simulation::start_round(int i, bool defer_schedule) {
  auto& s = st_[static_cast<std::size_t>(i)];
  s.drawn = s.mac.draw_backoff();
  s.counter = s.mac.countdown_for_draw(s.drawn);
  s.mode = Mode::kContend;
  s.aifs_end = -1;
  s.tx_time = -1;
  s.saw_burst = false;
  if (!defer_schedule && engine_idle()) {
    compute_aifs(i, std::max(idle_start_, now()));
    consider_fire(i);
  }
}

void Simulation::compute_aifs(int i, SimTime ref) {
  auto& s = st_[static_cast<std::size_t>(i)];
  const TduSchedule* sched = cfg_.strategy.tdu ? &cfg_.tdu : nullptr;
  int aifs_slots = s.mac.effective_aifs(ref, sched);
  SimTime slot = s.mac.params().slot_time;
  s.aifs_end = ref + cfg_.phy.sifs + static_cast<SimTime>(aifs_slots) * slot;
  s.tx_time = s.aifs_end + static_cast<SimTime>(s.counter) * slot;
}

void Simulation::consider_fire(int i) {
  auto& s = st_[static_cast<std::size_t>(i)];
  if (s.tx_time < 0) return;
  if (fire_handle_ && s.tx_time >= fire_time_) return;
  if (fire_handle_) queue_.cancel(*fire_handle_);
  Event ev;
  ev.kind = EventKind::kBackoffSlotBoundary;
  ev.fire_at = s.tx_time;
  fire_time_ = s.tx_time;
  fire_handle_ = queue_.schedule(ev);
}

void Simulation::on_fire(SimTime t) {
  fire_handle_.reset();
  fire_time_ = -1;

  // Winners: everyone whose countdown expires exactly now. Processing in
  // station order keeps runs reproducible.
  std::vector<int> transmitters;
  for (int i = 0; i < cfg_.n_stations; ++i) {
    auto& s = st_[static_cast<std::size_t>(i)];
    if (s.mode != Mode::kContend || s.tx_time != t) continue;
    if (!s.frame) {
      auto before = s.queue.timeout_drops();
      s.frame = s.queue.dequeue_head(t);
      auto dropped = s.queue.timeout_drops() - before;
      if (measured(t)) metrics_.timeout_drops += dropped;
      if (!s.frame) {
        // Nothing left to send: withdraw until the next arrival.
        s.mode = Mode::kIdle;
        s.aifs_end = -1;
        s.tx_time = -1;
        continue;
      }
    }
    transmitters.push_back(i);
  }

  if (transmitters.empty()) {
    // All winners withdrew; countdown of the others continues unbroken.
    SimTime best = -1;
    for (auto& s : st_) {
      if (s.mode == Mode::kContend && s.tx_time >= 0 &&
          (best < 0 || s.tx_time < best)) {
        best = s.tx_time;
      }
    }
    if (best >= 0) {
      Event ev;
      ev.kind = EventKind::kBackoffSlotBoundary;
      ev.fire_at = best;
      fire_time_ = best;
      fire_handle_ = queue_.schedule(ev);
    }
    return;
  }

  for (int i : transmitters) {
    auto& s = st_[static_cast<std::size_t>(i)];
    s.tx_id = medium_.begin_tx(i, s.frame->payload_bits, t);
    s.mode = Mode::kTx;
    s.tx_start = t;
    s.mac.note_attempt();
    if (measured(t)) ++metrics_.tx_attempts;
    Event ev;
    ev.kind = EventKind::kTxEnd;
    ev.station = i;
    ev.payload = static_cast<std::int64_t>(s.tx_id);
    ev.fire_at = t + cfg_.phy.tx_duration(s.frame->payload_bits);
    queue_.schedule(ev);
  }
  busy_onset(t);
}

void Simulation::busy_onset(SimTime t) {
  if (fire_handle_) {
    queue_.cancel(*fire_handle_);
    fire_handle_.reset();
    fire_time_ = -1;
  }
  for (auto& s : st_) {
    if (s.mode != Mode::kContend) continue;
    if (s.aifs_end >= 0) {
      if (t > s.aifs_end) {
        SimTime slot = s.mac.params().slot_time;
        auto dec = static_cast<int>((t - s.aifs_end) / slot);
        s.counter -= std::min(dec, s.counter);
      }
      s.aifs_end = -1;
      s.tx_time = -1;
    }
    s.saw_burst = true;
  }
}

void Simulation::idle_restart(SimTime t) {
  if (fire_handle_) {
    queue_.cancel(*fire_handle_);
    fire_handle_.reset();
    fire_time_ = -1;
  }
  idle_start_ = t;
  SimTime best = -1;
  for (int i = 0; i < cfg_.n_stations; ++i) {
    auto& s = st_[static_cast<std::size_t>(i)];
    if (s.mode != Mode::kContend) continue;
    // A busy burst consumes one slot position of the shared grid for
    // deterministic-backoff stations.
    if (s.saw_burst && s.mac.counts_busy_bursts() && s.counter > 0) {
      --s.counter;
    }
    s.saw_burst = false;
    compute_aifs(i, t);
    if (best < 0 || s.tx_time < best) best = s.tx_time;
  }
  if (best >= 0) {
    Event ev;
    ev.kind = EventKind::kBackoffSlotBoundary;
    ev.fire_at = best;
    fire_time_ = best;
    fire_handle_ = queue_.schedule(ev);
  }
  if (track_convergence_ && !metrics_.convergence_time) check_convergence(t);
}

void Simulation::maybe_idle_restart(SimTime t) {
  if (engine_idle()) idle_restart(t);
}

void Simulation::check_convergence(SimTime t) {
  for (auto& s : st_) {
    if (s.mode != Mode::kContend || !s.mac.last_attempt_succeeded() ||
        !s.mac.has_transmitted() || s.queue.empty()) {
      return;
    }
  }
  std::vector<int> counters;
  counters.reserve(st_.size());
  for (auto& s : st_) counters.push_back(s.counter);
  std::sort(counters.begin(), counters.end());
  for (std::size_t i = 1; i < counters.size(); ++i) {
    if (counters[i] == counters[i - 1]) return;
  }
  metrics_.convergence_time = t;
}

void Simulation::on_tx_end(const Event& ev) {
  TxRecord rec = medium_.end_tx(static_cast<std::size_t>(ev.payload), now());

  if (rec.is_ack) {
    // Acknowledgment completed: the exchange succeeded for its sender.
    int i = pending_ack_station_;
    pending_ack_station_ = -1;
    auto& s = st_[static_cast<std::size_t>(i)];
    if (s.ack_timeout) {
      queue_.cancel(*s.ack_timeout);
      s.ack_timeout.reset();
    }
    s.mac.on_tx_success(s.drawn);
    s.frame.reset();
    s.tx_start = -1;
    if (s.queue.empty()) {
      s.mode = Mode::kIdle;
      s.aifs_end = -1;
      s.tx_time = -1;
    } else {
      start_round(i, true);
    }
    maybe_idle_restart(now());
    return;
  }

  auto& s = st_[static_cast<std::size_t>(rec.station_id)];
  bool counted = measured(rec.start);
  SimTime slot = s.mac.params().slot_time;
  s.mode = Mode::kAwaitAck;

  if (rec.outcome == TxOutcome::kDelivered) {
    ++metrics_.total_delivered;
    if (counted) {
      ++metrics_.received;
      metrics_.delivered_payload_bits += rec.payload_bits;
    }
    exchange_pending_ = true;
    pending_ack_station_ = rec.station_id;
    Event ack;
    ack.kind = EventKind::kAckDue;
    ack.station = rec.station_id;
    ack.fire_at = rec.end + cfg_.phy.sifs;
    queue_.schedule(ack);
  } else {
    if (counted) ++metrics_.collisions;
    if (metrics_.convergence_time) ++metrics_.collisions_after_convergence;
  }

  Event timeout;
  timeout.kind = EventKind::kAckTimeout;
  timeout.station = rec.station_id;
  timeout.fire_at = rec.end + cfg_.phy.sifs + cfg_.phy.ack_duration + slot;
  s.ack_timeout = queue_.schedule(timeout);

  maybe_idle_restart(now());
}

void Simulation::on_ack_due(int i, SimTime t) {
  auto ack_id = medium_.begin_tx(-1, 0, t, /*is_ack=*/true);
  exchange_pending_ = false;
  Event ev;
  ev.kind = EventKind::kTxEnd;
  ev.station = -1;
  ev.payload = static_cast<std::int64_t>(ack_id);
  ev.fire_at = t + cfg_.phy.ack_duration;
  queue_.schedule(ev);
  (void)i;
}

void Simulation::on_ack_timeout(int i) {
  auto& s = st_[static_cast<std::size_t>(i)];
  s.ack_timeout.reset();
  s.tx_start = -1;
  bool drop = s.mac.on_tx_failure();
  if (drop) {
    ++metrics_.total_retry_drops;
    if (measured(now())) ++metrics_.retry_drops;
    s.frame.reset();
    if (s.queue.empty()) {
      s.mode = Mode::kIdle;
      s.aifs_end = -1;
      s.tx_time = -1;
      return;
    }
  }
  start_round(i, false);
}

}  // namespace macsim
