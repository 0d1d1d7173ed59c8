#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <filesystem>
#include <sstream>

#include "gatekit/error.hpp"
#include "gatekit/io.hpp"

using namespace gatekit;
using Catch::Matchers::ContainsSubstring;

TEST_CASE("delay csv round trip", "[io]") {
  const std::string text =
      "flight_id,tail,sched_dep_min,act_dep_min,sched_arr_min,act_arr_min\n"
      "NW1,N100,600,612,,\n"
      "NW2,N200,,,700,690.5\n"
      "NW3,N300,800,801,500,530\n";
  std::istringstream in(text);
  const auto rows = io::read_delay_csv(in);
  REQUIRE(rows.size() == 3);
  REQUIRE(rows[0].is_departure());
  REQUIRE_FALSE(rows[0].is_arrival());
  REQUIRE(*rows[1].act_arr == 690.5);
  REQUIRE_FALSE(rows[1].sched_dep.has_value());
  REQUIRE(rows[2].is_arrival());
  REQUIRE(rows[2].is_departure());

  std::ostringstream out;
  io::write_delay_csv(out, rows);
  std::istringstream back(out.str());
  const auto again = io::read_delay_csv(back);
  REQUIRE(again.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) {
    REQUIRE(again[i].flight_id == rows[i].flight_id);
    REQUIRE(again[i].act_dep == rows[i].act_dep);
    REQUIRE(again[i].act_arr == rows[i].act_arr);
  }
}

TEST_CASE("malformed csv rows name their line", "[io]") {
  std::istringstream empty("");
  REQUIRE_THROWS_WITH(io::read_delay_csv(empty, "d.csv"), ContainsSubstring("empty file"));

  std::istringstream bad(
      "flight_id,tail,sched_dep_min,act_dep_min,sched_arr_min,act_arr_min\n"
      "NW1,N1,600,612,,\n"
      "NW2,N2,abc,612,,\n");
  REQUIRE_THROWS_AS(io::read_delay_csv(bad, "d.csv"), ParseError);
  std::istringstream bad2(
      "flight_id,tail,sched_dep_min,act_dep_min,sched_arr_min,act_arr_min\n"
      "NW1,N1,600,612,,\n"
      "NW2,N2,abc,612,,\n");
  REQUIRE_THROWS_WITH(io::read_delay_csv(bad2, "d.csv"), ContainsSubstring("d.csv:3"));

  std::istringstream short_row(
      "flight_id,tail,sched_arr_min,sched_dep_min,pax_in,pax_origin,pax_dest\n"
      "A,T,0,60\n");
  REQUIRE_THROWS_WITH(io::read_schedule_csv(short_row, "s.csv"), ContainsSubstring("s.csv:2"));
}

TEST_CASE("schedule csv", "[io]") {
  std::istringstream in(
      "flight_id,tail,sched_arr_min,sched_dep_min,pax_in,pax_origin,pax_dest\n"
      "A,T1,0,60,100,40,50\n"
      "B,T2,1400,30,90,10,10\n"
      "C,T3,100,180,120,0,70\n");
  const auto rows = io::read_schedule_csv(in);
  REQUIRE(rows.flights.size() == 2);
  REQUIRE(rows.skipped_overnight == 1);
  REQUIRE(rows.flights[1].id == "C");
  REQUIRE(rows.flights[1].pax_dest == 70);

  const Schedule s(rows.flights, 3);
  std::ostringstream out;
  io::write_schedule_csv(out, s);
  std::istringstream back(out.str());
  const auto again = io::read_schedule_csv(back);
  REQUIRE(again.flights.size() == 2);
  REQUIRE(again.flights[0].sched_dep == 60.0);
  REQUIRE(again.flights[1].pax_in == 120);
}

TEST_CASE("transfers csv", "[io]") {
  const Schedule s({{"A", "T", 0, 60, 100, 40, 50}, {"B", "T", 100, 160, 100, 40, 50}}, 2);
  std::istringstream in("flight_i,flight_k,pax\nA,B,7\n");
  const auto t = io::read_transfers_csv(in, s);
  REQUIRE(t.get(0, 1) == 7);
  std::ostringstream out;
  io::write_transfers_csv(out, s, t);
  std::istringstream back(out.str());
  REQUIRE(io::read_transfers_csv(back, s).get(0, 1) == 7);

  std::istringstream unknown("flight_i,flight_k,pax\nA,Z,7\n");
  REQUIRE_THROWS_AS(io::read_transfers_csv(unknown, s), ParseError);
}

TEST_CASE("json round trips", "[io]") {
  const auto d = DelayDistribution::dtw_arrival();
  REQUIRE(io::delay_distribution_from_json(io::to_json(d)) == d);
  const auto m = TurnModel::dtw();
  REQUIRE(io::turn_model_from_json(io::to_json(m)) == m);
  const auto c = ConflictCurve::dtw_reported();
  const auto c2 = io::conflict_curve_from_json(io::to_json(c));
  REQUIRE(c2.intercept_a == c.intercept_a);
  REQUIRE(c2.base_b == c.base_b);
  REQUIRE(c2.dep_dist == c.dep_dist);
  REQUIRE(c2.arr_dist == c.arr_dist);

  const auto ramp = make_horseshoe_ramp({});
  const auto r2 = io::ramp_from_json(io::to_json(ramp));
  REQUIRE(r2.gate_to_gate == ramp.gate_to_gate);
  REQUIRE(r2.checkpoint_dist == ramp.checkpoint_dist);
  REQUIRE(r2.walk_speed == ramp.walk_speed);
  REQUIRE(r2.layout == ramp.layout);

  REQUIRE_THROWS(io::delay_distribution_from_json(io::json::parse(R"({"mu": 1})")));
}

TEST_CASE("assignment json", "[io]") {
  const Schedule s({{"A", "T", 0, 60, 100, 40, 50}, {"B", "T", 100, 160, 100, 40, 50}}, 2);
  const Assignment a{{1, 0}};
  const auto j = io::assignment_to_json(s, a);
  REQUIRE(j["gates"] == 2);
  REQUIRE(io::assignment_from_json(j, s) == a);

  auto missing = j;
  missing["assignment"].erase("B");
  REQUIRE_THROWS_AS(io::assignment_from_json(missing, s), IncompleteAssignment);
  auto extra = j;
  extra["assignment"]["Q"] = 0;
  REQUIRE_THROWS_AS(io::assignment_from_json(extra, s), ParseError);
}

TEST_CASE("simulation outcome json writes undefined values as null", "[io]") {
  SimOutcome o;
  o.gate_mean_separation = {30.0, std::nan("")};
  const auto j = io::to_json(o);
  REQUIRE(j["gate_mean_separation"][0] == 30.0);
  REQUIRE(j["gate_mean_separation"][1].is_null());
}

TEST_CASE("files, digests and number formatting", "[io]") {
  REQUIRE(io::fnv1a64("") == 0xcbf29ce484222325ULL);
  REQUIRE(io::fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
  REQUIRE(io::hex64(0xcbf29ce484222325ULL) == "cbf29ce484222325");
  REQUIRE(io::fixed(1.23456, 2) == "1.23");
  REQUIRE(io::fixed(-0.0001, 2) == "0.00");

  const auto dir = std::filesystem::temp_directory_path() / "gatekit_io_test" / "nested";
  std::filesystem::remove_all(dir.parent_path());
  io::write_text(dir / "x.json", R"({"k": [1, 2]})");
  REQUIRE(io::read_json(dir / "x.json")["k"][1] == 2);
  io::write_text(dir / "bad.json", "{");
  REQUIRE_THROWS_AS(io::read_json(dir / "bad.json"), ParseError);
  REQUIRE_THROWS_AS(io::read_text(dir / "absent.txt"), ParseError);
  std::filesystem::remove_all(dir.parent_path());
}
