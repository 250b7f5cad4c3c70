#include <doctest.h>

#include <stdexcept>

#include "macsim/edca.hpp"

using namespace macsim;

TEST_CASE("voice and video windows follow the 4~8 and 8~16 slot ranges") {
  auto voice = default_edca(AccessCategory::kVoice);
  CHECK(voice.cw_min == 4);
  CHECK(voice.cw_max == 8);
  auto video = default_edca(AccessCategory::kVideo);
  CHECK(video.cw_min == 8);
  CHECK(video.cw_max == 16);
  auto be = default_edca(AccessCategory::kBestEffort);
  CHECK(be.cw_min == 16);
  CHECK(be.cw_max == 1024);
  CHECK(be.aifs_slots == 3);
  CHECK(default_edca(AccessCategory::kBackground).aifs_slots == 7);
}

TEST_CASE("doubling chains stay inside [cw_min, cw_max]") {
  for (auto ac : {AccessCategory::kVoice, AccessCategory::kVideo,
                  AccessCategory::kBestEffort, AccessCategory::kBackground}) {
    auto p = default_edca(ac);
    int cw = p.cw_min;
    while (cw < p.cw_max) cw *= 2;
    CHECK(cw == p.cw_max);  // chain lands exactly on the maximum
  }
}

TEST_CASE("eicw halves the slot and doubles slot-denominated values") {
  EdcaParams p = default_edca(AccessCategory::kBestEffort);
  CHECK(p.slot_time == microseconds(9));
  CHECK(p.cw_min == 16);
  EdcaParams q = apply_eicw(p);
  CHECK(q.slot_time == 4500);
  CHECK(q.cw_min == 32);
  CHECK(q.cw_max == 2048);
  CHECK(q.aifs_slots == 6);
  // 16 x 9us == 32 x 4.5us == 144us, exactly in integer ns.
  CHECK(p.window_duration(p.cw_min) == 144'000);
  CHECK(q.window_duration(q.cw_min) == 144'000);
}

TEST_CASE("eicw maps voice 4~8 onto 8~16 at the half slot") {
  EdcaParams q = apply_eicw(default_edca(AccessCategory::kVoice));
  CHECK(q.cw_min == 8);
  CHECK(q.cw_max == 16);
  CHECK(q.slot_time == 4500);
}

TEST_CASE("eicw preserves AIFS and window wall-clock durations exactly") {
  const SimTime sifs = microseconds(16);
  for (auto ac : {AccessCategory::kVoice, AccessCategory::kVideo,
                  AccessCategory::kBestEffort, AccessCategory::kBackground}) {
    EdcaParams before = default_edca(ac);
    EdcaParams after = apply_eicw(before);
    CHECK(before.aifs_duration(sifs) == after.aifs_duration(sifs));
    CHECK(before.window_duration(before.cw_min) ==
          after.window_duration(after.cw_min));
    CHECK(before.window_duration(before.cw_max) ==
          after.window_duration(after.cw_max));
  }
}

TEST_CASE("applying eicw twice is an error") {
  EdcaParams once = apply_eicw(default_edca(AccessCategory::kVideo));
  CHECK_THROWS_AS(apply_eicw(once), std::logic_error);
}

TEST_CASE("access category names round-trip") {
  for (auto ac : {AccessCategory::kVoice, AccessCategory::kVideo,
                  AccessCategory::kBestEffort, AccessCategory::kBackground}) {
    CHECK(access_category_from_string(to_string(ac)) == ac);
  }
  CHECK_THROWS_AS(access_category_from_string("bulk"), std::invalid_argument);
}
