#include <doctest.h>

#include "macsim/scenario.hpp"

using namespace macsim;

TEST_CASE("defaults run without a config file") {
  Scenario sc;
  sc.validate();
  CHECK(sc.stations == std::vector<int>{5, 10, 15, 20, 25, 30});
  CHECK(sc.protocols.size() == 8);  // the paper's comparison matrix
  CHECK(sc.seeds.size() == 10);
  CHECK(sc.flow.kind == FlowKind::kSaturatedCbr);
}

TEST_CASE("config text overrides keyed defaults") {
  const char* text = R"(
# density sweep
[scenario]
stations = 5,10
protocols = legacy,eca
seeds = 1..4
duration_s = 3
warmup_s = 0.5

[traffic]
packet_bytes = 500
offered_mbps = 4

[queue]
delay_limit_ms = 250
capacity = 64

[mac]
eca_mode = fixed-half
retry_limit = 5
)";
  Scenario sc = parse_config_text(text);
  sc.validate();
  CHECK(sc.stations == std::vector<int>{5, 10});
  REQUIRE(sc.protocols.size() == 2);
  CHECK(to_string(sc.protocols[1]) == "eca");
  CHECK(sc.seeds == std::vector<std::uint64_t>{1, 2, 3, 4});
  CHECK(sc.duration_s == doctest::Approx(3.0));
  CHECK(sc.flow.packet_bytes == 500);
  CHECK(sc.flow.offered_bps == doctest::Approx(4e6));
  CHECK(sc.queue_delay_limit_ms == doctest::Approx(250.0));
  CHECK(sc.queue_capacity == 64);
  CHECK(sc.eca_mode == EcaMode::kFixedHalf);
  CHECK(sc.retry_limit == 5);
}

TEST_CASE("unknown keys are named in the diagnostic") {
  try {
    parse_config_text("[scenario]\nstatoins = 5\n");
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    CHECK(std::string(e.what()).find("scenario.statoins") != std::string::npos);
  }
}

TEST_CASE("malformed values name the offending key") {
  CHECK_THROWS_AS(parse_config_text("[traffic]\npacket_bytes = lots\n"),
                  ConfigError);
  CHECK_THROWS_AS(parse_config_text("[scenario]\nprotocols = warp\n"),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_config_text("no equals sign here\n"), ConfigError);
}

TEST_CASE("validation rejects inconsistent sweeps") {
  Scenario sc;
  sc.stations.clear();
  CHECK_THROWS_AS(sc.validate(), ConfigError);

  Scenario sc2;
  sc2.warmup_s = 60;
  CHECK_THROWS_AS(sc2.validate(), ConfigError);

  Scenario sc3;
  sc3.tdu_owners = {9};
  sc3.stations = {5};
  CHECK_THROWS_AS(sc3.validate(), ConfigError);
}

TEST_CASE("echo round-trips to an identical scenario") {
  Scenario sc;
  sc.stations = {4, 8};
  sc.protocols = parse_protocol_list("legacy,eicw+tdu");
  sc.seeds = {3, 5};
  sc.duration_s = 2.5;
  sc.warmup_s = 0.25;
  sc.flow.offered_bps = 6e6;
  sc.flow.packet_bytes = 800;
  sc.queue_capacity = 42;
  sc.eca_mode = EcaMode::kFixedHalf;
  sc.tdu_owner_aifs_slots = 2;

  Scenario again = parse_config_text(sc.echo());
  CHECK(again.stations == sc.stations);
  CHECK(again.seeds == sc.seeds);
  REQUIRE(again.protocols.size() == sc.protocols.size());
  for (std::size_t i = 0; i < sc.protocols.size(); ++i) {
    CHECK(again.protocols[i] == sc.protocols[i]);
  }
  CHECK(again.duration_s == doctest::Approx(sc.duration_s));
  CHECK(again.warmup_s == doctest::Approx(sc.warmup_s));
  CHECK(again.flow.offered_bps == doctest::Approx(sc.flow.offered_bps));
  CHECK(again.flow.packet_bytes == sc.flow.packet_bytes);
  CHECK(again.queue_capacity == sc.queue_capacity);
  CHECK(again.eca_mode == sc.eca_mode);
  CHECK(again.tdu_owner_aifs_slots == sc.tdu_owner_aifs_slots);
  // The echo of the echo is byte-identical.
  CHECK(again.echo() == sc.echo());
}
