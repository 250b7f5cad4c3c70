#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "macsim/time.hpp"

namespace macsim {

/// Per-run counters. Reported counters exclude the warmup interval;
/// the engine keys per-frame counters on the frame's transmission start
/// so the attempt identity stays exact at the warmup boundary.
struct RunMetrics {
  std::int64_t generated = 0;
  std::int64_t tx_attempts = 0;
  std::int64_t collisions = 0;  // collided data-frame attempts
  std::int64_t received = 0;    // delivered data frames
  std::int64_t delivered_payload_bits = 0;
  std::int64_t timeout_drops = 0;
  std::int64_t overflow_drops = 0;
  std::int64_t retry_drops = 0;
  SimTime sim_duration = 0;
  SimTime warmup = 0;

  // Full-run conservation bookkeeping (never warmup-gated).
  std::int64_t total_generated = 0;
  std::int64_t total_delivered = 0;
  std::int64_t total_timeout_drops = 0;
  std::int64_t total_overflow_drops = 0;
  std::int64_t total_retry_drops = 0;
  std::int64_t end_in_queue = 0;
  std::int64_t end_in_flight = 0;      // frames in service at the horizon
  std::int64_t end_unresolved_tx = 0;  // measured attempts still on the air

  // ECA convergence observability: time of the first event where every
  // station's last attempt succeeded and all countdown phases differ.
  std::optional<SimTime> convergence_time;
  std::int64_t collisions_after_convergence = 0;

  /// generated = delivered + in-queue + drops + in-flight, exactly.
  bool conservation_holds() const {
    return total_generated == total_delivered + end_in_queue +
                                  total_timeout_drops + total_overflow_drops +
                                  total_retry_drops + end_in_flight;
  }

  /// tx_attempts = collisions + received + in-flight-at-end, exactly.
  bool attempt_identity_holds() const {
    return tx_attempts == collisions + received + end_unresolved_tx;
  }
};

/// collisions / received. Undefined (nullopt) when nothing was received,
/// which is distinct from a measured zero.
std::optional<double> collision_rate(const RunMetrics& m);

/// Delivered payload bits per second of measured (post-warmup) time.
double goodput_bps(const RunMetrics& m);

/// Mean, unbiased sample std and normal-approximation 95% CI half-width.
struct Aggregate {
  int runs = 0;
  double mean = 0.0;
  double sample_std = 0.0;
  double ci95 = 0.0;
};

Aggregate aggregate(const std::vector<double>& values);

}  // namespace macsim
