#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "macsim/analytic.hpp"
#include "support/enumeration_oracle.hpp"

using namespace macsim;

TEST_CASE("a lone contender cannot collide") {
  CHECK(collision_probability({1, 8}) == 0.0);
}

TEST_CASE("two contenders collide iff they pick the same slot") {
  CHECK(collision_probability({2, 16}) == doctest::Approx(0.0625).epsilon(1e-15));
  for (int w : {2, 3, 4, 8, 16, 32, 64}) {
    CHECK(std::abs(collision_probability({2, w}) - 1.0 / w) < 1e-15);
  }
}

TEST_CASE("five voice contenders exceed one half") {
  // Exhaustive oracle over the 4^5 = 1024 outcomes.
  auto exact = oracle::enumerate_tuples(5, 4);
  CHECK(exact.total_outcomes == 1024);
  CHECK(exact.value() == doctest::Approx(0.521484375).epsilon(1e-15));
  double closed = collision_probability({5, 4});
  CHECK(closed == 0.521484375);
  CHECK(closed > 0.5);
}

TEST_CASE("probability grows with contender count") {
  CHECK(collision_probability({10, 4}) > collision_probability({5, 4}));
  auto exact10 = oracle::collision_probability_exact(10, 4);
  auto exact5 = oracle::collision_probability_exact(5, 4);
  CHECK(exact10.value() > exact5.value());
}

TEST_CASE("closed form equals exhaustive enumeration") {
  for (int w : {2, 4, 8, 16, 32}) {
    for (int n = 1; n <= 6; ++n) {
      auto exact = oracle::collision_probability_exact(n, w);
      double closed = collision_probability({n, w});
      CHECK(std::abs(closed - exact.value()) < 1e-12);
    }
  }
}

TEST_CASE("tuple and occupancy oracles agree where both are feasible") {
  for (int w : {2, 4, 8}) {
    for (int n = 1; n <= 6; ++n) {
      auto a = oracle::enumerate_tuples(n, w);
      auto b = oracle::enumerate_occupancies(n, w);
      CHECK(a.collision_outcomes == b.collision_outcomes);
      CHECK(a.total_outcomes == b.total_outcomes);
    }
  }
}

TEST_CASE("curve starts at zero and never decreases") {
  auto curve = probability_curve(4, 3);
  REQUIRE(curve.size() == 3);
  CHECK(curve[0].first == 1);
  CHECK(curve[0].second == 0.0);
  CHECK(curve[1].second == doctest::Approx(0.25).epsilon(1e-15));
  auto exact3 = oracle::enumerate_tuples(3, 4);
  CHECK(curve[2].second == doctest::Approx(exact3.value()).epsilon(1e-12));

  for (int w : {2, 4, 8, 16, 32}) {
    auto c = probability_curve(w, 40);
    CHECK(c.front().second == 0.0);
    for (std::size_t i = 1; i < c.size(); ++i) {
      CHECK(c[i].second >= c[i - 1].second);
    }
  }
}

TEST_CASE("wider windows dominate narrower ones pointwise") {
  auto c8 = probability_curve(8, 40);
  auto c16 = probability_curve(16, 40);
  for (std::size_t i = 1; i < c8.size(); ++i) {
    CHECK(c16[i].second <= c8[i].second);
  }
}

TEST_CASE("invalid rounds are rejected") {
  CHECK_THROWS_AS(collision_probability({0, 4}), std::invalid_argument);
  CHECK_THROWS_AS(collision_probability({4, 0}), std::invalid_argument);
  CHECK_THROWS_AS(probability_curve(0, 5), std::invalid_argument);
}
