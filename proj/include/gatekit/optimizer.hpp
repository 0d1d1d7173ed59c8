#pragma once
// Robust gate assignment: feasibility, objectives, and solvers.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "gatekit/conflict.hpp"
#include "gatekit/schedule.hpp"
#include "gatekit/transit.hpp"

namespace gatekit {

/// Gate index per flight, aligned with Schedule::flights().
struct Assignment {
  std::vector<int> gate_of;

  int gates_used() const;
  bool operator==(const Assignment&) const = default;
};

enum class Neighborhood { move, swap, both };

std::string to_string(Neighborhood n);
Neighborhood neighborhood_from_string(const std::string& name);

struct SolverConfig {
  double buffer_min = 15.0;
  /// 0 selects 7 + floor(|F| / 50).
  int tabu_tenure = 0;
  int max_iterations = 5000;
  int max_non_improving = 500;
  Neighborhood neighborhood = Neighborhood::both;
  std::uint64_t seed = 1;
  /// Weight of the robust term when a ramp is supplied.
  double alpha = 1.0;
  int restarts = 3;

  /// Throws std::invalid_argument on buffer < 0, alpha outside [0, 1],
  /// or non-positive iteration/restart counts.
  void validate() const;
  int tenure_for(std::size_t flights) const;
};

struct Violation {
  std::size_t i;
  std::size_t k;
  int gate;
  double separation;
};

struct FeasibilityReport {
  bool feasible = true;
  std::vector<Violation> violations;
};

/// Same-gate pairs must satisfy
/// (sch_d(i) - sch_a(k) + buffer)(sch_d(k) - sch_a(i) + buffer) <= 0.
/// Throws IncompleteAssignment if the assignment does not cover the schedule
/// with gate indices in [0, gate_count).
FeasibilityReport is_feasible(const Schedule& schedule, const Assignment& assignment,
                              double buffer_min);

/// Sum over same-gate pairs of a * b^sep, times the arriving passengers of
/// the later flight when `weighted`. Throws InfeasibleInput if a same-gate
/// pair violates `buffer_min`.
double objective_robust(const Schedule& schedule, const Assignment& assignment,
                        const ConflictCurve& curve, bool weighted, double buffer_min = 0.0);

/// Passenger-minutes walking checkpoint->gate, gate->baggage and gate->gate
/// for transfers. Throws MissingGeometry for gates outside the ramp.
double objective_transit(const Schedule& schedule, const Assignment& assignment,
                         const RampConfig& ramp, const TransferMatrix& transfers);

/// (1 - alpha) * transit + alpha * weighted robust.
double combined_objective(const Schedule& schedule, const Assignment& assignment,
                          const ConflictCurve& curve, const RampConfig& ramp,
                          const TransferMatrix& transfers, double alpha);

/// First fit in arrival order: each flight goes to the lowest-index gate
/// whose latest occupant leaves at least `buffer_min` before it arrives.
/// Throws NoFeasibleGate when the gates run out.
Assignment greedy_assign(const Schedule& schedule, double buffer_min);

struct TabuResult {
  Assignment assignment;
  double objective = 0.0;
  double initial_objective = 0.0;
  /// Best objective after each iteration, restarts concatenated; entry 0
  /// is the starting point. Nonincreasing.
  std::vector<double> trace;
  int iterations = 0;
  int best_restart = 0;
};

/// Tabu search over single-flight moves and pairwise swaps, rejecting
/// infeasible neighbours. Without a ramp the objective is the unweighted
/// robust sum; with a ramp (and transfers) it is the combined objective at
/// config.alpha. Restart 0 starts from `initial` (or the greedy assignment),
/// later restarts from randomized feasible constructions; the best is kept.
/// Throws NoFeasibleStart.
TabuResult tabu_search(const Schedule& schedule, const SolverConfig& config,
                       const ConflictCurve& curve, const RampConfig* ramp = nullptr,
                       const TransferMatrix* transfers = nullptr,
                       const Assignment* initial = nullptr);

using ObjectiveFn = std::function<double(const Assignment&)>;

struct ExhaustiveResult {
  Assignment assignment;
  double objective = 0.0;
  std::size_t feasible_assignments = 0;
};

/// Enumerates every feasible assignment. Throws TooLarge when
/// gate_count^|F| > 1e7 and NoFeasibleAssignment when none exists.
ExhaustiveResult exhaustive_solve(const Schedule& schedule, double buffer_min,
                                  const ObjectiveFn& objective);

struct TradeoffPoint {
  double alpha = 0.0;
  double transit = 0.0;
  double robust = 0.0;  ///< weighted by arriving passengers
  double sum = 0.0;     ///< transit + robust
  Assignment assignment;
};

/// One tabu solve per alpha on the combined objective.
std::vector<TradeoffPoint> alpha_sweep(const Schedule& schedule, const SolverConfig& config,
                                       const ConflictCurve& curve, const RampConfig& ramp,
                                       const TransferMatrix& transfers,
                                       std::span<const double> alphas);

struct AssignmentSummary {
  int gates_used = 0;
  /// Smallest separation between consecutive flights on a gate; +inf when
  /// no gate holds two flights.
  double min_separation = 0.0;
};

AssignmentSummary summarize(const Schedule& schedule, const Assignment& assignment);

}  // namespace gatekit
