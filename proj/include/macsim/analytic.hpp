#pragma once

#include <utility>
#include <vector>

namespace macsim {

/// One contention round: n stations each pick one of w slots uniformly.
struct ContentionRound {
  int n;  // contenders, >= 1
  int w;  // slots in the contention window, >= 1
};

/// Probability that the earliest occupied slot is chosen by two or more
/// contenders (the winner is the minimum chosen slot; a collision occurs
/// iff that minimum is not unique):
///
///   P = 1 - sum_{s=0}^{w-1} n * (1/w) * ((w-1-s)/w)^(n-1)
double collision_probability(const ContentionRound& round);

/// [(1, p1), ..., (n_max, p_nmax)] for a fixed window size.
std::vector<std::pair<int, double>> probability_curve(int w, int n_max);

}  // namespace macsim
