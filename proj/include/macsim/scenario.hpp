#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "macsim/engine.hpp"

namespace macsim {

/// Sweep description: densities x protocol combinations x seeds, plus
/// the shared channel/traffic/queue parameters. Every key has a default
/// so a sweep runs with no config file at all.
struct Scenario {
  std::vector<int> stations = {5, 10, 15, 20, 25, 30};
  std::vector<StrategySet> protocols = {
      strategy_from_string("legacy"),     strategy_from_string("eicw"),
      strategy_from_string("eca"),        strategy_from_string("tdu"),
      strategy_from_string("eicw+eca"),   strategy_from_string("eicw+tdu"),
      strategy_from_string("eca+tdu"),    strategy_from_string("eicw+eca+tdu")};
  std::vector<std::uint64_t> seeds = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
  double duration_s = 30.0;
  double warmup_s = 1.0;
  AccessCategory ac = AccessCategory::kBestEffort;
  int legacy_stations = 0;
  PhyProfile phy;
  FlowSpec flow;
  int queue_capacity = 100;
  double queue_delay_limit_ms = 500.0;
  SimTime tdu_tc = milliseconds(100);
  SimTime tdu_tf = milliseconds(10);
  int tdu_owner_aifs_slots = 1;
  std::vector<int> tdu_owners;  // explicit per-TF owner override
  EcaMode eca_mode = EcaMode::kSameSlot;
  int retry_limit = 7;
  bool trace = false;
  int jobs = 1;

  /// Concretize one cell of the sweep.
  RunConfig make_run(StrategySet strategy, int n, std::uint64_t seed) const;

  void validate() const;

  /// Effective configuration in the same key/value format parse_config
  /// accepts; re-running from this echo reproduces the sweep.
  std::string echo() const;
};

/// Parse the plain-text config format: `[section]` headers and
/// `key = value` lines, `#` comments. Unknown keys are errors naming the
/// offending key. Starts from defaults (or `base`).
Scenario parse_config_text(const std::string& text, Scenario base = {});
Scenario parse_config_file(const std::string& path, Scenario base = {});

/// Comma-separated helpers shared with the CLI ("5,10" / "1..10").
std::vector<int> parse_int_list(const std::string& text);
std::vector<std::uint64_t> parse_seed_list(const std::string& text);
std::vector<StrategySet> parse_protocol_list(const std::string& text);

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace macsim
