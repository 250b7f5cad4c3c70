#include "macsim/scenario.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace macsim {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) out.push_back(trim(item));
  if (!s.empty() && s.back() == sep) out.push_back("");
  return out;
}

double to_double(const std::string& key, const std::string& value) {
  try {
    std::size_t pos = 0;
    double d = std::stod(value, &pos);
    if (pos != value.size()) throw std::invalid_argument(value);
    return d;
  } catch (const std::exception&) {
    throw ConfigError("config key '" + key + "': not a number: " + value);
  }
}

std::int64_t to_int(const std::string& key, const std::string& value) {
  try {
    std::size_t pos = 0;
    long long v = std::stoll(value, &pos);
    if (pos != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw ConfigError("config key '" + key + "': not an integer: " + value);
  }
}

bool to_bool(const std::string& key, const std::string& value) {
  if (value == "true" || value == "1" || value == "yes") return true;
  if (value == "false" || value == "0" || value == "no") return false;
  throw ConfigError("config key '" + key + "': not a boolean: " + value);
}

SimTime seconds_to_time(double s) {
  return static_cast<SimTime>(std::llround(s * 1e9));
}

}  // namespace

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  for (const auto& part : split(text, ',')) {
    if (part.empty()) continue;
    out.push_back(static_cast<int>(to_int("list", part)));
  }
  return out;
}

std::vector<std::uint64_t> parse_seed_list(const std::string& text) {
  std::vector<std::uint64_t> out;
  for (const auto& part : split(text, ',')) {
    if (part.empty()) continue;
    auto dots = part.find("..");
    if (dots != std::string::npos) {
      auto lo = to_int("seeds", part.substr(0, dots));
      auto hi = to_int("seeds", part.substr(dots + 2));
      for (auto v = lo; v <= hi; ++v) out.push_back(static_cast<std::uint64_t>(v));
    } else {
      out.push_back(static_cast<std::uint64_t>(to_int("seeds", part)));
    }
  }
  return out;
}

std::vector<StrategySet> parse_protocol_list(const std::string& text) {
  std::vector<StrategySet> out;
  for (const auto& part : split(text, ',')) {
    if (part.empty()) continue;
    out.push_back(strategy_from_string(part));
  }
  return out;
}

RunConfig Scenario::make_run(StrategySet strategy, int n,
                             std::uint64_t seed) const {
  RunConfig rc;
  rc.n_stations = n;
  rc.strategy = strategy;
  rc.legacy_stations = legacy_stations;
  rc.ac = ac;
  rc.phy = phy;
  rc.flow = flow;
  rc.queue_capacity = queue_capacity;
  rc.queue_delay_limit =
      static_cast<SimTime>(std::llround(queue_delay_limit_ms * 1e6));
  if (strategy.tdu) {
    TduSchedule sched;
    sched.tc_duration = tdu_tc;
    sched.tf_duration = tdu_tf;
    sched.owner_aifs_slots = tdu_owner_aifs_slots;
    if (!tdu_owners.empty()) {
      sched.owner_of = tdu_owners;
    } else {
      sched = default_tdu_schedule(n);
      sched.tc_duration = tdu_tc;
      sched.tf_duration = tdu_tf;
      sched.owner_aifs_slots = tdu_owner_aifs_slots;
      sched.validate();
      int frames = sched.frames_per_cycle();
      sched.owner_of.resize(static_cast<std::size_t>(frames));
      for (int i = 0; i < frames; ++i) {
        sched.owner_of[static_cast<std::size_t>(i)] = i % n;
      }
    }
    rc.tdu = sched;
  }
  rc.eca_mode = eca_mode;
  rc.retry_limit = retry_limit;
  rc.duration = seconds_to_time(duration_s);
  rc.warmup = seconds_to_time(warmup_s);
  rc.seed = seed;
  rc.keep_log = trace;
  return rc;
}

void Scenario::validate() const {
  if (stations.empty()) throw ConfigError("config key 'stations': empty sweep list");
  if (protocols.empty()) throw ConfigError("config key 'protocols': empty sweep list");
  if (seeds.empty()) throw ConfigError("config key 'seeds': empty sweep list");
  for (int n : stations) {
    if (n < 1) throw ConfigError("config key 'stations': need n >= 1");
    if (!tdu_owners.empty()) {
      for (int owner : tdu_owners) {
        if (owner < 0 || owner >= n) {
          throw ConfigError("config key 'tdu.owners': station " +
                            std::to_string(owner) + " not in a sweep of " +
                            std::to_string(n) + " stations");
        }
      }
    }
  }
  if (duration_s <= 0) throw ConfigError("config key 'duration_s': must be > 0");
  if (warmup_s < 0 || warmup_s >= duration_s) {
    throw ConfigError("config key 'warmup_s': need 0 <= warmup < duration");
  }
  if (legacy_stations < 0) {
    throw ConfigError("config key 'legacy_stations': must be >= 0");
  }
  if (queue_capacity < 1) throw ConfigError("config key 'queue.capacity': must be >= 1");
  if (queue_delay_limit_ms <= 0) {
    throw ConfigError("config key 'queue.delay_limit_ms': must be > 0");
  }
  if (retry_limit < 1) throw ConfigError("config key 'mac.retry_limit': must be >= 1");
  if (jobs < 1) throw ConfigError("config key 'jobs': must be >= 1");
  if (tdu_tf <= 0 || tdu_tc <= 0 || tdu_tc % tdu_tf != 0) {
    throw ConfigError("config key 'tdu.tc_ms': must be an exact multiple of tdu.tf_ms");
  }
  if (flow.packet_bytes < 64) {
    throw ConfigError("config key 'traffic.packet_bytes': must be >= 64");
  }
  if (flow.offered_bps <= 0) {
    throw ConfigError("config key 'traffic.offered_mbps': must be > 0");
  }
}

Scenario parse_config_text(const std::string& text, Scenario base) {
  Scenario sc = base;
  std::istringstream in(text);
  std::string line;
  std::string section;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') {
        throw ConfigError("config line " + std::to_string(lineno) +
                          ": malformed section header");
      }
      section = trim(line.substr(1, line.size() - 2));
      continue;
    }
    auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("config line " + std::to_string(lineno) +
                        ": expected key = value");
    }
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    std::string full = section.empty() ? key : section + "." + key;

    if (full == "scenario.stations" || full == "stations") {
      sc.stations = parse_int_list(value);
    } else if (full == "scenario.protocols" || full == "protocols" ||
               full == "scenario.protocol" || full == "protocol") {
      sc.protocols = parse_protocol_list(value);
    } else if (full == "scenario.seeds" || full == "seeds") {
      sc.seeds = parse_seed_list(value);
    } else if (full == "scenario.duration_s" || full == "duration_s") {
      sc.duration_s = to_double(full, value);
    } else if (full == "scenario.warmup_s" || full == "warmup_s") {
      sc.warmup_s = to_double(full, value);
    } else if (full == "scenario.ac" || full == "ac") {
      sc.ac = access_category_from_string(value);
    } else if (full == "scenario.legacy_stations" || full == "legacy_stations") {
      sc.legacy_stations = static_cast<int>(to_int(full, value));
    } else if (full == "scenario.jobs" || full == "jobs") {
      sc.jobs = static_cast<int>(to_int(full, value));
    } else if (full == "scenario.trace" || full == "trace") {
      sc.trace = to_bool(full, value);
    } else if (full == "mac.eca_mode" || full == "eca_mode") {
      if (value == "same-slot") {
        sc.eca_mode = EcaMode::kSameSlot;
      } else if (value == "fixed-half") {
        sc.eca_mode = EcaMode::kFixedHalf;
      } else {
        throw ConfigError("config key '" + full +
                          "': expected same-slot or fixed-half");
      }
    } else if (full == "mac.retry_limit" || full == "retry_limit") {
      sc.retry_limit = static_cast<int>(to_int(full, value));
    } else if (full == "phy.slot_us") {
      sc.phy.slot_time = static_cast<SimTime>(
          std::llround(to_double(full, value) * 1000.0));
    } else if (full == "phy.sifs_us") {
      sc.phy.sifs = static_cast<SimTime>(
          std::llround(to_double(full, value) * 1000.0));
    } else if (full == "phy.data_rate_mbps") {
      sc.phy.data_rate_bps =
          static_cast<std::int64_t>(std::llround(to_double(full, value) * 1e6));
    } else if (full == "phy.ack_us") {
      sc.phy.ack_duration = static_cast<SimTime>(
          std::llround(to_double(full, value) * 1000.0));
    } else if (full == "phy.header_bits") {
      sc.phy.header_overhead_bits = to_int(full, value);
    } else if (full == "traffic.kind") {
      sc.flow.kind = flow_kind_from_string(value);
    } else if (full == "traffic.packet_bytes") {
      sc.flow.packet_bytes = to_int(full, value);
    } else if (full == "traffic.offered_mbps") {
      sc.flow.offered_bps = to_double(full, value) * 1e6;
    } else if (full == "traffic.mean_on_s") {
      sc.flow.mean_on_s = to_double(full, value);
    } else if (full == "traffic.mean_off_s") {
      sc.flow.mean_off_s = to_double(full, value);
    } else if (full == "queue.delay_limit_ms") {
      sc.queue_delay_limit_ms = to_double(full, value);
    } else if (full == "queue.capacity") {
      sc.queue_capacity = static_cast<int>(to_int(full, value));
    } else if (full == "tdu.tc_ms") {
      sc.tdu_tc = static_cast<SimTime>(std::llround(to_double(full, value) * 1e6));
    } else if (full == "tdu.tf_ms") {
      sc.tdu_tf = static_cast<SimTime>(std::llround(to_double(full, value) * 1e6));
    } else if (full == "tdu.owner_aifs_slots") {
      sc.tdu_owner_aifs_slots = static_cast<int>(to_int(full, value));
    } else if (full == "tdu.owners") {
      sc.tdu_owners = parse_int_list(value);
    } else {
      throw ConfigError("unknown config key '" + full + "' (line " +
                        std::to_string(lineno) + ")");
    }
  }
  return sc;
}

Scenario parse_config_file(const std::string& path, Scenario base) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str(), base);
}

std::string Scenario::echo() const {
  std::ostringstream out;
  auto list_int = [](const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(v[i]);
    }
    return s;
  };

  out << "[scenario]\n";
  out << "stations = " << list_int(stations) << "\n";
  out << "protocols = ";
  for (std::size_t i = 0; i < protocols.size(); ++i) {
    if (i) out << ',';
    out << to_string(protocols[i]);
  }
  out << "\n";
  out << "seeds = ";
  for (std::size_t i = 0; i < seeds.size(); ++i) {
    if (i) out << ',';
    out << seeds[i];
  }
  out << "\n";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", duration_s);
  out << "duration_s = " << buf << "\n";
  std::snprintf(buf, sizeof(buf), "%.6g", warmup_s);
  out << "warmup_s = " << buf << "\n";
  out << "ac = " << to_string(ac) << "\n";
  out << "legacy_stations = " << legacy_stations << "\n";
  out << "jobs = " << jobs << "\n";
  out << "trace = " << (trace ? "true" : "false") << "\n";
  out << "\n[mac]\n";
  out << "eca_mode = "
      << (eca_mode == EcaMode::kSameSlot ? "same-slot" : "fixed-half") << "\n";
  out << "retry_limit = " << retry_limit << "\n";
  out << "\n[phy]\n";
  std::snprintf(buf, sizeof(buf), "%.6g", static_cast<double>(phy.slot_time) / 1000.0);
  out << "slot_us = " << buf << "\n";
  std::snprintf(buf, sizeof(buf), "%.6g", static_cast<double>(phy.sifs) / 1000.0);
  out << "sifs_us = " << buf << "\n";
  std::snprintf(buf, sizeof(buf), "%.6g", static_cast<double>(phy.data_rate_bps) / 1e6);
  out << "data_rate_mbps = " << buf << "\n";
  std::snprintf(buf, sizeof(buf), "%.6g", static_cast<double>(phy.ack_duration) / 1000.0);
  out << "ack_us = " << buf << "\n";
  out << "header_bits = " << phy.header_overhead_bits << "\n";
  out << "\n[traffic]\n";
  out << "kind = " << to_string(flow.kind) << "\n";
  out << "packet_bytes = " << flow.packet_bytes << "\n";
  std::snprintf(buf, sizeof(buf), "%.6g", flow.offered_bps / 1e6);
  out << "offered_mbps = " << buf << "\n";
  std::snprintf(buf, sizeof(buf), "%.6g", flow.mean_on_s);
  out << "mean_on_s = " << buf << "\n";
  std::snprintf(buf, sizeof(buf), "%.6g", flow.mean_off_s);
  out << "mean_off_s = " << buf << "\n";
  out << "\n[queue]\n";
  std::snprintf(buf, sizeof(buf), "%.6g", queue_delay_limit_ms);
  out << "delay_limit_ms = " << buf << "\n";
  out << "capacity = " << queue_capacity << "\n";
  out << "\n[tdu]\n";
  std::snprintf(buf, sizeof(buf), "%.6g", static_cast<double>(tdu_tc) / 1e6);
  out << "tc_ms = " << buf << "\n";
  std::snprintf(buf, sizeof(buf), "%.6g", static_cast<double>(tdu_tf) / 1e6);
  out << "tf_ms = " << buf << "\n";
  out << "owner_aifs_slots = " << tdu_owner_aifs_slots << "\n";
  if (!tdu_owners.empty()) out << "owners = " << list_int(tdu_owners) << "\n";
  return out.str();
}

}  // namespace macsim
