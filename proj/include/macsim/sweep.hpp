#pragma once

#include <optional>
#include <string>
#include <vector>

#include "macsim/metrics.hpp"
#include "macsim/scenario.hpp"

namespace macsim {

struct RunResult {
  StrategySet strategy;
  int n_stations = 0;
  std::uint64_t seed = 0;
  std::optional<RunMetrics> metrics;  // nullopt marks a failed run
  std::string error;
};

struct SweepResult {
  std::vector<RunResult> runs;  // ordered by (combo, n, seed)
  bool any_failed = false;
};

/// Execute every (combo, n, seed) cell of the scenario. Runs are
/// independent; with jobs > 1 they execute concurrently but results are
/// merged in deterministic (combo, n, seed) order, so the output is
/// identical to a serial sweep.
SweepResult run_sweep(const Scenario& sc);

/// CSV emission. Both files start with the effective configuration as
/// '#'-prefixed header lines.
std::string per_run_csv(const Scenario& sc, const SweepResult& result);
std::string aggregate_csv(const Scenario& sc, const SweepResult& result);

/// Probability curves for each window size, one row per (w, n).
std::string analytic_csv(const std::vector<int>& w_list, int n_max);

/// Transmission log of one traced run (station, start, end, bits, outcome).
std::string trace_csv(const std::vector<TxRecord>& log);

}  // namespace macsim
