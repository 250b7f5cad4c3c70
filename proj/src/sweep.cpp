#include "macsim/sweep.hpp"

#include <atomic>
#include <cstdio>
#include <sstream>
#include <thread>

#include "macsim/analytic.hpp"
#include "macsim/engine.hpp"

namespace macsim {

namespace {

std::string fmt(const char* format, double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), format, v);
  return buf;
}

void emit_config_header(std::ostringstream& out, const Scenario& sc) {
  std::istringstream echo(sc.echo());
  std::string line;
  while (std::getline(echo, line)) out << "# " << line << "\n";
}

}  // namespace

SweepResult run_sweep(const Scenario& sc) {
  sc.validate();

  SweepResult result;
  for (const auto& combo : sc.protocols) {
    for (int n : sc.stations) {
      for (auto seed : sc.seeds) {
        RunResult r;
        r.strategy = combo;
        r.n_stations = n;
        r.seed = seed;
        result.runs.push_back(r);
      }
    }
  }

  auto execute = [&sc](RunResult& r) {
    try {
      Simulation sim(sc.make_run(r.strategy, r.n_stations, r.seed));
      r.metrics = sim.run();
    } catch (const std::exception& e) {
      r.error = e.what();
    }
  };

  int jobs = sc.jobs;
  if (jobs <= 1) {
    for (auto& r : result.runs) execute(r);
  } else {
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
      for (;;) {
        std::size_t idx = next.fetch_add(1);
        if (idx >= result.runs.size()) return;
        execute(result.runs[idx]);
      }
    };
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  for (const auto& r : result.runs) {
    if (!r.metrics) result.any_failed = true;
  }
  return result;
}

std::string per_run_csv(const Scenario& sc, const SweepResult& result) {
  std::ostringstream out;
  emit_config_header(out, sc);
  out << "protocol,n_stations,seed,duration_s,tx_attempts,collisions,"
         "received,collision_rate,goodput_bps,timeout_drops,overflow_drops,"
         "retry_drops\n";
  for (const auto& r : result.runs) {
    out << to_string(r.strategy) << ',' << r.n_stations << ',' << r.seed << ',';
    if (!r.metrics) {
      out << "FAILED,,,,,,,,\n";
      continue;
    }
    const RunMetrics& m = *r.metrics;
    out << fmt("%.3f", to_seconds(m.sim_duration)) << ',' << m.tx_attempts
        << ',' << m.collisions << ',' << m.received << ',';
    auto rate = collision_rate(m);
    if (rate) {
      out << fmt("%.9f", *rate);
    } else {
      out << "undefined";
    }
    out << ',' << fmt("%.3f", goodput_bps(m)) << ',' << m.timeout_drops << ','
        << m.overflow_drops << ',' << m.retry_drops << "\n";
  }
  return out.str();
}

std::string aggregate_csv(const Scenario& sc, const SweepResult& result) {
  std::ostringstream out;
  emit_config_header(out, sc);
  out << "protocol,n_stations,runs,collision_rate_mean,collision_rate_ci95,"
         "goodput_mean_bps,goodput_ci95_bps\n";
  for (const auto& combo : sc.protocols) {
    for (int n : sc.stations) {
      std::vector<double> rates;
      std::vector<double> goodputs;
      for (const auto& r : result.runs) {
        if (!(r.strategy == combo) || r.n_stations != n || !r.metrics) continue;
        auto rate = collision_rate(*r.metrics);
        if (rate) rates.push_back(*rate);
        goodputs.push_back(goodput_bps(*r.metrics));
      }
      Aggregate ar = aggregate(rates);
      Aggregate ag = aggregate(goodputs);
      out << to_string(combo) << ',' << n << ',' << ag.runs << ','
          << fmt("%.9f", ar.mean) << ',' << fmt("%.9f", ar.ci95) << ','
          << fmt("%.3f", ag.mean) << ',' << fmt("%.3f", ag.ci95) << "\n";
    }
  }
  return out.str();
}

std::string analytic_csv(const std::vector<int>& w_list, int n_max) {
  std::ostringstream out;
  out << "w,n,p_collision\n";
  for (int w : w_list) {
    for (const auto& [n, p] : probability_curve(w, n_max)) {
      out << w << ',' << n << ',' << fmt("%.12f", p) << "\n";
    }
  }
  return out.str();
}

std::string trace_csv(const std::vector<TxRecord>& log) {
  std::ostringstream out;
  out << "station,start_ns,end_ns,bits,outcome\n";
  for (const auto& rec : log) {
    out << rec.station_id << ',' << rec.start << ',' << rec.end << ','
        << rec.payload_bits << ','
        << (rec.outcome == TxOutcome::kDelivered ? "delivered" : "collided")
        << "\n";
  }
  return out.str();
}

}  // namespace macsim
