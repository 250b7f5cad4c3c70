// Experiment front end: density sweeps over protocol combinations and
// the closed-form collision-probability curves, both emitted as CSV.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "macsim/engine.hpp"
#include "macsim/scenario.hpp"
#include "macsim/sweep.hpp"

namespace fs = std::filesystem;

namespace {

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << content;
}

fs::path resolve_out_dir(std::string cli_value) {
  // MACSIM_OUT_DIR overrides the output directory and nothing else.
  if (const char* env = std::getenv("MACSIM_OUT_DIR")) return fs::path(env);
  return fs::path(cli_value);
}

int run_simulate(const std::string& config_path, const std::string& stations,
                 const std::string& protocols, const std::string& seeds,
                 const std::string& out_dir_flag, bool trace, int jobs,
                 double duration_s, double warmup_s) {
  macsim::Scenario sc;
  try {
    if (!config_path.empty()) sc = macsim::parse_config_file(config_path);
    if (!stations.empty()) sc.stations = macsim::parse_int_list(stations);
    if (!protocols.empty()) sc.protocols = macsim::parse_protocol_list(protocols);
    if (!seeds.empty()) sc.seeds = macsim::parse_seed_list(seeds);
    if (trace) sc.trace = true;
    if (jobs > 0) sc.jobs = jobs;
    if (duration_s > 0) sc.duration_s = duration_s;
    if (warmup_s >= 0) sc.warmup_s = warmup_s;
    sc.validate();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  fs::path out_dir = resolve_out_dir(out_dir_flag);
  std::error_code ec;
  fs::create_directories(out_dir, ec);

  macsim::SweepResult result = macsim::run_sweep(sc);

  write_file(out_dir / "runs.csv", macsim::per_run_csv(sc, result));
  write_file(out_dir / "aggregate.csv", macsim::aggregate_csv(sc, result));
  write_file(out_dir / "effective_config.ini", sc.echo());

  if (sc.trace) {
    // One transmission log per run cell.
    for (const auto& r : result.runs) {
      if (!r.metrics) continue;
      macsim::Simulation sim(sc.make_run(r.strategy, r.n_stations, r.seed));
      sim.run();
      std::string name = "trace_" + macsim::to_string(r.strategy) + "_n" +
                         std::to_string(r.n_stations) + "_s" +
                         std::to_string(r.seed) + ".csv";
      write_file(out_dir / name, macsim::trace_csv(sim.medium_log()));
    }
  }

  int failed = 0;
  for (const auto& r : result.runs) {
    if (!r.metrics) {
      ++failed;
      std::cerr << "run failed: " << macsim::to_string(r.strategy) << " n="
                << r.n_stations << " seed=" << r.seed << ": " << r.error
                << "\n";
    }
  }
  std::cout << result.runs.size() - static_cast<std::size_t>(failed) << "/"
            << result.runs.size() << " runs completed; results in "
            << out_dir.string() << "\n";
  return result.any_failed ? 1 : 0;
}

int run_analytic(const std::string& w_list, int n_max,
                 const std::string& out_file) {
  std::vector<int> ws;
  try {
    ws = w_list.empty() ? std::vector<int>{4, 8, 16, 32}
                        : macsim::parse_int_list(w_list);
    if (ws.empty() || n_max < 1) {
      throw macsim::ConfigError("analytic: need non-empty w list and nmax >= 1");
    }
    for (int w : ws) {
      if (w < 1) throw macsim::ConfigError("analytic: w must be >= 1");
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  std::string csv = macsim::analytic_csv(ws, n_max);
  if (out_file.empty() || out_file == "-") {
    std::cout << csv;
  } else {
    write_file(out_file, csv);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"IEEE 802.11 contention simulator and collision analysis"};
  app.require_subcommand(1);

  auto* simulate = app.add_subcommand(
      "simulate", "Run a density sweep over protocol combinations");
  std::string config_path;
  std::string stations;
  std::string protocols;
  std::string seeds;
  std::string out_dir = "results";
  bool trace = false;
  int jobs = 0;
  double duration_s = 0;
  double warmup_s = -1;
  simulate->add_option("--config", config_path, "Config file (key = value sections)");
  simulate->add_option("--stations", stations, "Station counts, e.g. 5,10,30");
  simulate->add_option("--protocols", protocols,
                       "Protocol combos, e.g. legacy,eicw+eca");
  simulate->add_option("--seeds", seeds, "Seed list, e.g. 1..10 or 1,7,42");
  simulate->add_option("--out", out_dir, "Output directory");
  simulate->add_flag("--trace", trace, "Emit per-run transmission logs");
  simulate->add_option("--jobs", jobs, "Parallel runs (output unaffected)");
  simulate->add_option("--duration-s", duration_s, "Simulated seconds per run");
  simulate->add_option("--warmup-s", warmup_s, "Warmup excluded from counters");

  auto* analytic = app.add_subcommand(
      "analytic", "Collision probability vs contender count per CW size");
  std::string w_list;
  int n_max = 30;
  std::string out_file;
  analytic->add_option("--w", w_list, "Window sizes in slots (default 4,8,16,32)");
  analytic->add_option("--nmax", n_max, "Largest contender count");
  analytic->add_option("--out", out_file, "Output CSV file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (simulate->parsed()) {
      return run_simulate(config_path, stations, protocols, seeds, out_dir,
                          trace, jobs, duration_s, warmup_s);
    }
    return run_analytic(w_list, n_max, out_file);
  } catch (const std::exception& e) {
    std::cerr << "fatal: " << e.what() << "\n";
    return 1;
  }
}
