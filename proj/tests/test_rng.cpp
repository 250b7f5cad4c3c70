#include <doctest.h>

#include <cmath>
#include <vector>

#include "macsim/rng.hpp"

using namespace macsim;

TEST_CASE("single slot window always draws zero") {
  RngStream rng(1, 0);
  for (int i = 0; i < 100; ++i) CHECK(uniform_slot(rng, 1) == 0);
}

TEST_CASE("w = 0 is rejected") {
  RngStream rng(1, 0);
  CHECK_THROWS_AS(uniform_slot(rng, 0), std::invalid_argument);
}

TEST_CASE("identical seed and stream give identical sequences") {
  RngStream a(42, 7);
  RngStream b(42, 7);
  for (int i = 0; i < 1000; ++i) CHECK(uniform_slot(a, 16) == uniform_slot(b, 16));
}

TEST_CASE("different streams from one seed differ") {
  RngStream a(42, 1);
  RngStream b(42, 2);
  int same = 0;
  for (int i = 0; i < 256; ++i) {
    if (uniform_slot(a, 1024) == uniform_slot(b, 1024)) ++same;
  }
  CHECK(same < 16);
}

TEST_CASE("uniform_slot frequencies stay within 5 sigma of 1/16") {
  // Chi-square style oracle on the generator: each bucket count is
  // Binomial(N, 1/16); each must land within five standard deviations.
  const int w = 16;
  const int draws = 1'000'000;
  RngStream rng(2024, 3);
  std::vector<int> counts(w, 0);
  for (int i = 0; i < draws; ++i) ++counts[static_cast<std::size_t>(uniform_slot(rng, w))];
  const double p = 1.0 / w;
  const double expect = draws * p;
  const double sigma = std::sqrt(draws * p * (1.0 - p));
  for (int s = 0; s < w; ++s) {
    CHECK(std::abs(counts[static_cast<std::size_t>(s)] - expect) < 5.0 * sigma);
  }
}

TEST_CASE("draw range respects the window") {
  RngStream rng(9, 4);
  for (int i = 0; i < 10'000; ++i) {
    int v = uniform_slot(rng, 16);
    CHECK(v >= 0);
    CHECK(v < 16);
  }
}
