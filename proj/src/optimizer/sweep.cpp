#include <stdexcept>

#include "gatekit/optimizer.hpp"

namespace gatekit {

std::vector<TradeoffPoint> alpha_sweep(const Schedule& schedule, const SolverConfig& config,
                                       const ConflictCurve& curve, const RampConfig& ramp,
                                       const TransferMatrix& transfers,
                                       std::span<const double> alphas) {
  std::vector<TradeoffPoint> points;
  points.reserve(alphas.size());
  for (double alpha : alphas) {
    if (!(alpha >= 0.0 && alpha <= 1.0))
      throw std::invalid_argument("alpha " + std::to_string(alpha) + " outside [0, 1]");
    SolverConfig cfg = config;
    cfg.alpha = alpha;
    TabuResult solved = tabu_search(schedule, cfg, curve, &ramp, &transfers);
    TradeoffPoint p;
    p.alpha = alpha;
    p.transit = objective_transit(schedule, solved.assignment, ramp, transfers);
    p.robust = objective_robust(schedule, solved.assignment, curve, true);
    p.sum = p.transit + p.robust;
    p.assignment = std::move(solved.assignment);
    points.push_back(std::move(p));
  }
  return points;
}

}  // namespace gatekit
