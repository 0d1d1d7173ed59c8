#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "gatekit/error.hpp"
#include "gatekit/optimizer.hpp"
#include "gatekit/transit.hpp"

using namespace gatekit;
using Catch::Approx;

namespace {

void require_metric(const RampConfig& r) {
  const std::size_t g = r.gate_count();
  REQUIRE(r.gate_to_gate.size() == g * g);
  for (std::size_t j = 0; j < g; ++j) {
    REQUIRE(r.distance(j, j) == 0.0);
    REQUIRE(r.checkpoint_dist[j] >= 0.0);
    REQUIRE(r.baggage_dist[j] >= 0.0);
    for (std::size_t l = 0; l < g; ++l) {
      REQUIRE(r.distance(j, l) == r.distance(l, j));
      REQUIRE(r.distance(j, l) >= 0.0);
    }
  }
  REQUIRE_NOTHROW(r.validate());
}

}  // namespace

TEST_CASE("parallel ramp", "[transit]") {
  SECTION("adjacent gates on one concourse") {
    ParallelRampOptions o;
    o.gates_per_concourse = 2;
    o.concourses = 1;
    const auto r = make_parallel_ramp(o);
    REQUIRE(r.gate_count() == 2);
    REQUIRE(r.distance(0, 1) == Approx(50.0));
    require_metric(r);
  }
  SECTION("default layout: 2 x 18 gates") {
    const auto r = make_parallel_ramp({});
    REQUIRE(r.gate_count() == 36);
    REQUIRE(r.layout == RampLayout::parallel);
    require_metric(r);
    // Cross-concourse: walk to the centre station, ride, walk out.
    const double ride = 300.0 * 60.0 / 300.0;
    const double off0 = (0 - 8.5) * 50.0;
    const double off5 = (5 - 8.5) * 50.0;
    REQUIRE(r.distance(0, 18 + 5) == Approx(std::fabs(off0) + std::fabs(off5) + ride));
    REQUIRE(r.distance(3, 7) == Approx(200.0));
    // Triangle inequality along each concourse walkway.
    for (int a = 0; a < 18; ++a)
      for (int b = 0; b < 18; ++b)
        for (int c = 0; c < 18; ++c)
          REQUIRE(r.distance(a, c) <= r.distance(a, b) + r.distance(b, c) + 1e-9);
  }
  SECTION("bad dimensions") {
    ParallelRampOptions o;
    o.gates_per_concourse = 0;
    REQUIRE_THROWS_AS(make_parallel_ramp(o), BadDimensions);
    o = {};
    o.walk_speed = 0.0;
    REQUIRE_THROWS_AS(make_parallel_ramp(o), BadDimensions);
  }
}

TEST_CASE("horseshoe ramp", "[transit]") {
  const HorseshoeRampOptions o;
  const auto r = make_horseshoe_ramp(o);
  REQUIRE(r.gate_count() == 20);
  require_metric(r);
  const double path = o.arm_left + o.base + o.arm_right;
  const double pitch = path / (o.gates - 1);
  REQUIRE(r.distance(0, 1) == Approx(pitch));
  REQUIRE(r.distance(0, 19) == Approx(path));
  for (std::size_t j = 0; j < 20; ++j) REQUIRE(r.distance(0, j) == Approx(pitch * j));
  HorseshoeRampOptions bad;
  bad.gates = 1;
  REQUIRE_THROWS_AS(make_horseshoe_ramp(bad), BadDimensions);
}

TEST_CASE("ramp validation", "[transit]") {
  auto r = make_parallel_ramp({});
  r.gate_to_gate[1] += 1.0;
  REQUIRE_THROWS_AS(r.validate(), BadDimensions);
  r = make_parallel_ramp({});
  r.checkpoint_dist.pop_back();
  REQUIRE_THROWS_AS(r.validate(), BadDimensions);
  REQUIRE(ramp_layout_from_string(to_string(RampLayout::horseshoe)) == RampLayout::horseshoe);
}

TEST_CASE("transit objective is linear in distance and speed", "[transit][invariant]") {
  std::vector<Flight> f;
  for (int i = 0; i < 12; ++i)
    f.push_back({"F" + std::to_string(i), "T", 400.0 + 40 * i, 460.0 + 40 * i, 100 + i, 30 + i, 40 - i});
  const Schedule s(f, 6);
  TransferMatrix t;
  t.add(0, 3, 7);
  t.add(2, 9, 4);
  t.add(5, 11, 12);
  const Assignment a{{0, 1, 2, 3, 4, 5, 0, 1, 2, 3, 4, 5}};
  const auto ramp = make_parallel_ramp({});
  const double base = objective_transit(s, a, ramp, t);
  REQUIRE(base > 0.0);
  REQUIRE(objective_transit(s, a, scale_distances(ramp, 2.5), t) == Approx(2.5 * base).epsilon(1e-14));
  RampConfig fast = ramp;
  fast.walk_speed *= 2.0;
  REQUIRE(objective_transit(s, a, fast, t) == Approx(base / 2.0).epsilon(1e-14));
}
