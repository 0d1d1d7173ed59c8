#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>

#include "gatekit/error.hpp"
#include "gatekit/optimizer.hpp"

namespace gatekit {
namespace {

void require_complete(const Schedule& schedule, const Assignment& assignment) {
  if (assignment.gate_of.size() != schedule.size())
    throw IncompleteAssignment("assignment covers " + std::to_string(assignment.gate_of.size()) +
                               " of " + std::to_string(schedule.size()) + " flights");
  for (std::size_t i = 0; i < schedule.size(); ++i) {
    const int g = assignment.gate_of[i];
    if (g < 0 || g >= schedule.gate_count())
      throw IncompleteAssignment("flight " + schedule[i].id + " has gate " + std::to_string(g) +
                                 " outside [0, " + std::to_string(schedule.gate_count()) + ")");
  }
}

std::vector<std::vector<std::size_t>> flights_by_gate(const Schedule& schedule,
                                                      const Assignment& assignment) {
  std::vector<std::vector<std::size_t>> gates(static_cast<std::size_t>(schedule.gate_count()));
  for (std::size_t i = 0; i < schedule.size(); ++i)
    gates[static_cast<std::size_t>(assignment.gate_of[i])].push_back(i);
  return gates;
}

}  // namespace

int Assignment::gates_used() const {
  return static_cast<int>(std::set<int>(gate_of.begin(), gate_of.end()).size());
}

std::string to_string(Neighborhood n) {
  switch (n) {
    case Neighborhood::move: return "move";
    case Neighborhood::swap: return "swap";
    case Neighborhood::both: return "both";
  }
  return "both";
}

Neighborhood neighborhood_from_string(const std::string& name) {
  if (name == "move") return Neighborhood::move;
  if (name == "swap") return Neighborhood::swap;
  if (name == "both") return Neighborhood::both;
  throw std::invalid_argument("unknown neighborhood: " + name);
}

void SolverConfig::validate() const {
  if (!(buffer_min >= 0.0)) throw std::invalid_argument("buffer must be >= 0");
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw std::invalid_argument("alpha must be in [0, 1]");
  if (max_iterations < 0 || max_non_improving <= 0 || restarts <= 0 || tabu_tenure < 0)
    throw std::invalid_argument("iteration, restart and tenure settings must be positive");
}

int SolverConfig::tenure_for(std::size_t flights) const {
  return tabu_tenure > 0 ? tabu_tenure : 7 + static_cast<int>(flights / 50);
}

FeasibilityReport is_feasible(const Schedule& schedule, const Assignment& assignment,
                              double buffer_min) {
  require_complete(schedule, assignment);
  FeasibilityReport report;
  const auto gates = flights_by_gate(schedule, assignment);
  for (std::size_t g = 0; g < gates.size(); ++g) {
    const auto& members = gates[g];
    for (std::size_t a = 0; a < members.size(); ++a) {
      for (std::size_t b = a + 1; b < members.size(); ++b) {
        const Flight& fi = schedule[members[a]];
        const Flight& fk = schedule[members[b]];
        const double lhs = (fi.sched_dep - fk.sched_arr + buffer_min) *
                           (fk.sched_dep - fi.sched_arr + buffer_min);
        if (lhs > 0.0) {
          report.feasible = false;
          report.violations.push_back(
              {members[a], members[b], static_cast<int>(g), gate_separation(fi, fk)});
        }
      }
    }
  }
  return report;
}

double objective_robust(const Schedule& schedule, const Assignment& assignment,
                        const ConflictCurve& curve, bool weighted, double buffer_min) {
  const FeasibilityReport feas = is_feasible(schedule, assignment, buffer_min);
  if (!feas.feasible) {
    const Violation& v = feas.violations.front();
    throw InfeasibleInput("objective_robust: flights " + schedule[v.i].id + " and " +
                          schedule[v.k].id + " share gate " + std::to_string(v.gate) +
                          " with separation " + std::to_string(v.separation));
  }
  double total = 0.0;
  for (const auto& members : flights_by_gate(schedule, assignment)) {
    for (std::size_t a = 0; a < members.size(); ++a) {
      for (std::size_t b = a + 1; b < members.size(); ++b) {
        const Flight& fi = schedule[members[a]];
        const Flight& fk = schedule[members[b]];
        double term = expected_conflict_duration_fast(curve, gate_separation(fi, fk));
        if (weighted) term *= leaves_first(fi, fk) ? fk.pax_in : fi.pax_in;
        total += term;
      }
    }
  }
  return total;
}

double objective_transit(const Schedule& schedule, const Assignment& assignment,
                         const RampConfig& ramp, const TransferMatrix& transfers) {
  require_complete(schedule, assignment);
  for (std::size_t i = 0; i < schedule.size(); ++i)
    if (static_cast<std::size_t>(assignment.gate_of[i]) >= ramp.gate_count())
      throw MissingGeometry("gate " + std::to_string(assignment.gate_of[i]) +
                            " is not on the ramp (" + std::to_string(ramp.gate_count()) +
                            " gates)");
  const double v = ramp.walk_speed;
  double total = 0.0;
  for (std::size_t i = 0; i < schedule.size(); ++i) {
    const auto g = static_cast<std::size_t>(assignment.gate_of[i]);
    total += schedule[i].pax_origin * ramp.checkpoint_dist[g] / v +
             schedule[i].pax_dest * ramp.baggage_dist[g] / v;
  }
  for (const auto& e : transfers.entries()) {
    const auto gi = static_cast<std::size_t>(assignment.gate_of.at(e.i));
    const auto gk = static_cast<std::size_t>(assignment.gate_of.at(e.k));
    total += e.pax * ramp.distance(gi, gk) / v;
  }
  return total;
}

double combined_objective(const Schedule& schedule, const Assignment& assignment,
                          const ConflictCurve& curve, const RampConfig& ramp,
                          const TransferMatrix& transfers, double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw std::invalid_argument("alpha must be in [0, 1]");
  return (1.0 - alpha) * objective_transit(schedule, assignment, ramp, transfers) +
         alpha * objective_robust(schedule, assignment, curve, true);
}

AssignmentSummary summarize(const Schedule& schedule, const Assignment& assignment) {
  require_complete(schedule, assignment);
  AssignmentSummary summary;
  summary.gates_used = assignment.gates_used();
  summary.min_separation = std::numeric_limits<double>::infinity();
  for (auto members : flights_by_gate(schedule, assignment)) {
    std::sort(members.begin(), members.end(), [&](std::size_t a, std::size_t b) {
      const Flight& fa = schedule[a];
      const Flight& fb = schedule[b];
      if (fa.sched_dep != fb.sched_dep) return fa.sched_dep < fb.sched_dep;
      if (fa.sched_arr != fb.sched_arr) return fa.sched_arr < fb.sched_arr;
      return a < b;
    });
    for (std::size_t j = 1; j < members.size(); ++j)
      summary.min_separation = std::min(
          summary.min_separation, gate_separation(schedule[members[j - 1]], schedule[members[j]]));
  }
  return summary;
}

}  // namespace gatekit
