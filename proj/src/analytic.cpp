#include "macsim/analytic.hpp"

#include <stdexcept>

namespace macsim {

namespace {

// Integer-exponent power by repeated multiplication. Exact for dyadic
// bases, unlike std::pow on some libms.
double ipow(double base, int exp) {
  double r = 1.0;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

}  // namespace

double collision_probability(const ContentionRound& round) {
  if (round.n < 1 || round.w < 1) {
    throw std::invalid_argument("collision_probability: need n >= 1, w >= 1");
  }
  const int n = round.n;
  const int w = round.w;
  const double inv_w = 1.0 / w;
  double p_unique_min = 0.0;
  for (int s = 0; s < w; ++s) {
    p_unique_min += n * inv_w * ipow((w - 1 - s) * inv_w, n - 1);
  }
  double p = 1.0 - p_unique_min;
  if (p < 0.0) p = 0.0;
  if (p > 1.0) p = 1.0;
  return p;
}

std::vector<std::pair<int, double>> probability_curve(int w, int n_max) {
  if (w < 1 || n_max < 1) {
    throw std::invalid_argument("probability_curve: need w >= 1, n_max >= 1");
  }
  std::vector<std::pair<int, double>> curve;
  curve.reserve(static_cast<std::size_t>(n_max));
  for (int n = 1; n <= n_max; ++n) {
    curve.emplace_back(n, collision_probability({n, w}));
  }
  return curve;
}

}  // namespace macsim
