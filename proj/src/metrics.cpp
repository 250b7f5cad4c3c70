#include "macsim/metrics.hpp"

#include <cmath>
#include <stdexcept>

namespace macsim {

std::optional<double> collision_rate(const RunMetrics& m) {
  if (m.received == 0) return std::nullopt;
  return static_cast<double>(m.collisions) / static_cast<double>(m.received);
}

double goodput_bps(const RunMetrics& m) {
  SimTime window = m.sim_duration - m.warmup;
  if (window <= 0) {
    throw std::invalid_argument("goodput: sim_duration must exceed warmup");
  }
  return static_cast<double>(m.delivered_payload_bits) / to_seconds(window);
}

Aggregate aggregate(const std::vector<double>& values) {
  Aggregate a;
  a.runs = static_cast<int>(values.size());
  if (values.empty()) return a;
  double sum = 0.0;
  for (double v : values) sum += v;
  a.mean = sum / static_cast<double>(a.runs);
  if (a.runs > 1) {
    double ss = 0.0;
    for (double v : values) ss += (v - a.mean) * (v - a.mean);
    a.sample_std = std::sqrt(ss / static_cast<double>(a.runs - 1));
    a.ci95 = 1.96 * a.sample_std / std::sqrt(static_cast<double>(a.runs));
  }
  return a;
}

}  // namespace macsim
