#include <doctest.h>

#include "macsim/medium.hpp"

using namespace macsim;

namespace {

PhyProfile test_phy() {
  PhyProfile phy;
  phy.data_rate_bps = 65'000'000;
  phy.header_overhead_bits = 0;
  return phy;
}

}  // namespace

TEST_CASE("sense is idle with no active transmissions") {
  Medium m(test_phy());
  CHECK_FALSE(m.sense(0));
  CHECK_FALSE(m.sense(seconds(5)));
}

TEST_CASE("sense over a half-open transmission interval") {
  Medium m(test_phy());
  auto id = m.begin_tx(0, 8000, microseconds(10));
  SimTime end = microseconds(10) + m.phy().tx_duration(8000);
  CHECK(m.sense(microseconds(10)));
  CHECK(m.sense(end - 1));
  CHECK_FALSE(m.sense(end));  // end instant is idle
  CHECK_FALSE(m.sense(microseconds(9)));
  m.end_tx(id, end);
}

TEST_CASE("duration is payload scaled by rate, rounded up") {
  // 1000 bytes at 65 Mb/s with zero header: ceil(8000 / 65e6 s).
  PhyProfile phy = test_phy();
  CHECK(phy.tx_duration(8000) == 123'077);
}

TEST_CASE("two transmissions at the same instant both collide") {
  Medium m(test_phy(), true);
  auto a = m.begin_tx(0, 8000, 0);
  auto b = m.begin_tx(1, 8000, 0);
  SimTime end = m.phy().tx_duration(8000);
  CHECK(m.end_tx(a, end).outcome == TxOutcome::kCollided);
  CHECK(m.end_tx(b, end).outcome == TxOutcome::kCollided);
}

TEST_CASE("a single unopposed transmission is delivered") {
  Medium m(test_phy());
  auto id = m.begin_tx(3, 8000, microseconds(5));
  auto rec = m.end_tx(id, microseconds(5) + m.phy().tx_duration(8000));
  CHECK(rec.outcome == TxOutcome::kDelivered);
  CHECK(rec.station_id == 3);
}

TEST_CASE("disjoint transmissions are both delivered") {
  Medium m(test_phy(), true);
  auto a = m.begin_tx(0, 800, 0);
  auto a_end = m.phy().tx_duration(800);
  CHECK(m.end_tx(a, a_end).outcome == TxOutcome::kDelivered);
  auto b = m.begin_tx(1, 800, a_end + microseconds(100));
  CHECK(m.end_tx(b, a_end + microseconds(100) + m.phy().tx_duration(800))
            .outcome == TxOutcome::kDelivered);
  CHECK(log_outcomes_consistent(m.log()));
}

TEST_CASE("a bridging transmission drags later overlappers down") {
  // A:[0,100us), B:[50,150us), C:[140,160us): B overlaps both, so all
  // three collide even though A and C are disjoint.
  PhyProfile phy = test_phy();
  phy.data_rate_bps = 1'000'000'000;  // 1 ns per bit for easy intervals
  Medium m(phy, true);
  auto a = m.begin_tx(0, 100'000, 0);
  auto b = m.begin_tx(1, 100'000, 50'000);
  CHECK(m.end_tx(a, 100'000).outcome == TxOutcome::kCollided);
  auto c = m.begin_tx(2, 20'000, 140'000);
  CHECK(m.end_tx(b, 150'000).outcome == TxOutcome::kCollided);
  CHECK(m.end_tx(c, 160'000).outcome == TxOutcome::kCollided);
  CHECK(log_outcomes_consistent(m.log()));
}

TEST_CASE("interval oracle flags any inconsistent log") {
  std::vector<TxRecord> log(2);
  log[0].start = 0;
  log[0].end = 100;
  log[0].outcome = TxOutcome::kDelivered;  // wrong: overlaps the next
  log[1].start = 50;
  log[1].end = 150;
  log[1].outcome = TxOutcome::kCollided;
  CHECK_FALSE(log_outcomes_consistent(log));
}
