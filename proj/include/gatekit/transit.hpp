#pragma once
// Ramp geometry: walking distances between gates, the security checkpoint
// and baggage claim, plus the average passenger moving speed.

#include <cstddef>
#include <string>
#include <vector>

namespace gatekit {

enum class RampLayout { parallel, horseshoe, custom };

std::string to_string(RampLayout layout);
RampLayout ramp_layout_from_string(const std::string& name);

struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

struct RampConfig {
  std::vector<Point2> gate_positions;   // meters
  std::vector<double> checkpoint_dist;  // d^s per gate, meters
  std::vector<double> baggage_dist;     // d^b per gate, meters
  std::vector<double> gate_to_gate;     // d_jl, row-major G x G, meters
  double walk_speed = 60.0;             // v^m, meters per minute
  RampLayout layout = RampLayout::custom;

  std::size_t gate_count() const { return checkpoint_dist.size(); }
  double distance(std::size_t j, std::size_t l) const { return gate_to_gate[j * gate_count() + l]; }

  /// Throws BadDimensions when sizes disagree, the distance matrix is not
  /// symmetric with zero diagonal, any distance is negative, or the speed
  /// is not positive.
  void validate() const;
};

struct ParallelRampOptions {
  int gates_per_concourse = 18;
  int concourses = 2;
  double gate_pitch = 50.0;        ///< spacing of neighbouring gates
  double concourse_gap = 300.0;    ///< people-mover track between stations
  double walk_speed = 60.0;
  double mover_speed = 300.0;      ///< people-mover speed, folded into distance
  double baggage_offset = 50.0;    ///< claim hall beyond the checkpoint
};

/// Concourses in parallel rows, each with a people-mover station at its
/// centre; the terminal sits one gap before the first station. Walking along
/// a concourse is measured directly; changing concourse walks to the station,
/// rides the mover (length scaled by walk_speed / mover_speed) and walks out.
RampConfig make_parallel_ramp(const ParallelRampOptions& options);

struct HorseshoeRampOptions {
  int gates = 20;
  double arm_left = 400.0;
  double base = 300.0;
  double arm_right = 400.0;
  double walk_speed = 60.0;
  double baggage_offset = 50.0;
};

/// Gates evenly spaced along a U-shaped pier (left arm, base, right arm);
/// distances follow the pier. The checkpoint is at the middle of the base.
RampConfig make_horseshoe_ramp(const HorseshoeRampOptions& options);

/// Returns a copy with every distance multiplied by `factor`.
RampConfig scale_distances(const RampConfig& ramp, double factor);

}  // namespace gatekit
