#include "gatekit/transit.hpp"

#include <cmath>

#include "gatekit/error.hpp"

namespace gatekit {

std::string to_string(RampLayout layout) {
  switch (layout) {
    case RampLayout::parallel: return "parallel";
    case RampLayout::horseshoe: return "horseshoe";
    case RampLayout::custom: return "custom";
  }
  return "custom";
}

RampLayout ramp_layout_from_string(const std::string& name) {
  if (name == "parallel") return RampLayout::parallel;
  if (name == "horseshoe") return RampLayout::horseshoe;
  if (name == "custom") return RampLayout::custom;
  throw BadDimensions("unknown ramp layout: " + name);
}

void RampConfig::validate() const {
  const std::size_t g = gate_count();
  if (g == 0) throw BadDimensions("ramp has no gates");
  if (baggage_dist.size() != g || gate_positions.size() != g || gate_to_gate.size() != g * g)
    throw BadDimensions("ramp arrays disagree on the gate count");
  if (!(walk_speed > 0.0)) throw BadDimensions("walk speed must be positive");
  for (std::size_t j = 0; j < g; ++j) {
    if (checkpoint_dist[j] < 0.0 || baggage_dist[j] < 0.0)
      throw BadDimensions("negative checkpoint or baggage distance");
    if (distance(j, j) != 0.0) throw BadDimensions("gate distance matrix needs a zero diagonal");
    for (std::size_t l = j + 1; l < g; ++l) {
      if (distance(j, l) < 0.0) throw BadDimensions("negative gate distance");
      if (distance(j, l) != distance(l, j)) throw BadDimensions("gate distance matrix is not symmetric");
    }
  }
}

RampConfig make_parallel_ramp(const ParallelRampOptions& o) {
  if (o.gates_per_concourse <= 0 || o.concourses <= 0 || !(o.gate_pitch > 0.0) ||
      !(o.concourse_gap > 0.0) || !(o.walk_speed > 0.0) || !(o.mover_speed > 0.0) ||
      o.baggage_offset < 0.0)
    throw BadDimensions("parallel ramp: dimensions must be positive");

  const auto per = static_cast<std::size_t>(o.gates_per_concourse);
  const auto g = per * static_cast<std::size_t>(o.concourses);
  const double ride = o.concourse_gap * o.walk_speed / o.mover_speed;

  RampConfig ramp;
  ramp.layout = RampLayout::parallel;
  ramp.walk_speed = o.walk_speed;
  std::vector<double> offset(g);
  std::vector<int> concourse(g);
  for (std::size_t j = 0; j < g; ++j) {
    concourse[j] = static_cast<int>(j / per);
    offset[j] = (static_cast<double>(j % per) - 0.5 * static_cast<double>(per - 1)) * o.gate_pitch;
    ramp.gate_positions.push_back({offset[j], (concourse[j] + 1) * o.concourse_gap});
    const double checkpoint = (concourse[j] + 1) * ride + std::abs(offset[j]);
    ramp.checkpoint_dist.push_back(checkpoint);
    ramp.baggage_dist.push_back(checkpoint + o.baggage_offset);
  }
  ramp.gate_to_gate.assign(g * g, 0.0);
  for (std::size_t j = 0; j < g; ++j) {
    for (std::size_t l = 0; l < g; ++l) {
      double d;
      if (concourse[j] == concourse[l]) {
        d = std::abs(offset[j] - offset[l]);
      } else {
        d = std::abs(offset[j]) + std::abs(offset[l]) +
            std::abs(concourse[j] - concourse[l]) * ride;
      }
      ramp.gate_to_gate[j * g + l] = d;
    }
  }
  return ramp;
}

RampConfig make_horseshoe_ramp(const HorseshoeRampOptions& o) {
  if (o.gates < 2 || !(o.arm_left > 0.0) || !(o.base > 0.0) || !(o.arm_right > 0.0) ||
      !(o.walk_speed > 0.0) || o.baggage_offset < 0.0)
    throw BadDimensions("horseshoe ramp: need >= 2 gates and positive dimensions");

  const double total = o.arm_left + o.base + o.arm_right;
  const double pitch = total / (o.gates - 1);
  const double checkpoint_at = o.arm_left + 0.5 * o.base;
  const auto g = static_cast<std::size_t>(o.gates);

  RampConfig ramp;
  ramp.layout = RampLayout::horseshoe;
  ramp.walk_speed = o.walk_speed;
  std::vector<double> s(g);
  for (std::size_t j = 0; j < g; ++j) {
    s[j] = j + 1 == g ? total : static_cast<double>(j) * pitch;
    Point2 p;
    if (s[j] <= o.arm_left) {
      p = {0.0, o.arm_left - s[j]};
    } else if (s[j] <= o.arm_left + o.base) {
      p = {s[j] - o.arm_left, 0.0};
    } else {
      p = {o.base, s[j] - o.arm_left - o.base};
    }
    ramp.gate_positions.push_back(p);
    const double checkpoint = std::abs(s[j] - checkpoint_at);
    ramp.checkpoint_dist.push_back(checkpoint);
    ramp.baggage_dist.push_back(checkpoint + o.baggage_offset);
  }
  ramp.gate_to_gate.assign(g * g, 0.0);
  for (std::size_t j = 0; j < g; ++j)
    for (std::size_t l = 0; l < g; ++l) ramp.gate_to_gate[j * g + l] = std::abs(s[j] - s[l]);
  return ramp;
}

RampConfig scale_distances(const RampConfig& ramp, double factor) {
  RampConfig out = ramp;
  for (auto& d : out.checkpoint_dist) d *= factor;
  for (auto& d : out.baggage_dist) d *= factor;
  for (auto& d : out.gate_to_gate) d *= factor;
  return out;
}

}  // namespace gatekit
