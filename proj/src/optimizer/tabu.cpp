#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <vector>

#include "gatekit/error.hpp"
#include "gatekit/optimizer.hpp"
#include "gatekit/optimizer/cost_model.hpp"
#include "gatekit/rng.hpp"

namespace gatekit {
namespace {

using detail::GateCostModel;
using detail::GateCostState;

// Arrival-order construction picking uniformly among the gates that are free.
std::optional<Assignment> random_first_fit(const Schedule& schedule, double buffer_min,
                                           Rng& rng) {
  const auto gates = static_cast<std::size_t>(schedule.gate_count());
  std::vector<double> free_at(gates, -std::numeric_limits<double>::infinity());
  std::vector<std::size_t> open;
  Assignment out;
  out.gate_of.assign(schedule.size(), -1);
  for (std::size_t f : schedule.arrival_order()) {
    open.clear();
    for (std::size_t g = 0; g < gates; ++g)
      if (free_at[g] + buffer_min <= schedule[f].sched_arr) open.push_back(g);
    if (open.empty()) return std::nullopt;
    const std::size_t g = open[static_cast<std::size_t>(
        rng.uniform_int(0, static_cast<std::int64_t>(open.size()) - 1))];
    out.gate_of[f] = static_cast<int>(g);
    free_at[g] = std::max(free_at[g], schedule[f].sched_dep);
  }
  return out;
}

struct Candidate {
  bool swap = false;
  std::size_t f1 = 0;
  std::size_t f2 = 0;
  int gate = 0;
  double delta = 0.0;
};

class TabuRun {
public:
  TabuRun(const GateCostModel& model, const SolverConfig& config, Rng& rng)
      : model_(model), config_(config), rng_(rng),
        tenure_(config.tenure_for(model.flights())) {}

  // Returns the best state reached; appends one trace entry per iteration.
  Assignment run(Assignment start, double& global_best, std::vector<double>& trace,
                 int& iterations) {
    GateCostState state(model_, std::move(start));
    const std::size_t n = model_.flights(), G = model_.gates();
    tabu_until_.assign(n * G, -1);
    Assignment best = state.assignment();
    double best_value = state.objective();
    global_best = std::min(global_best, best_value);
    const bool moves = config_.neighborhood != Neighborhood::swap;
    const bool swaps = config_.neighborhood != Neighborhood::move;

    int stale = 0;
    for (int it = 0; it < config_.max_iterations && stale < config_.max_non_improving; ++it) {
      const double cur = state.objective();
      const double eps = 1e-12 * std::max(1.0, std::fabs(cur));
      std::optional<Candidate> pick;
      int ties = 0;
      auto consider = [&](const Candidate& c, bool tabu) {
        if (tabu && !(cur + c.delta < global_best - eps)) return;
        if (!pick || c.delta < pick->delta - eps) {
          pick = c;
          ties = 1;
        } else if (std::fabs(c.delta - pick->delta) <= eps) {
          ++ties;
          if (rng_.uniform_int(1, ties) == 1) pick = c;
        }
      };

      if (moves) {
        for (std::size_t f = 0; f < n; ++f) {
          const int g0 = state.gate_of(f);
          for (std::size_t g = 0; g < G; ++g) {
            const int gi = static_cast<int>(g);
            if (gi == g0 || !state.move_feasible(f, gi)) continue;
            consider({false, f, 0, gi, state.move_delta(f, gi)}, is_tabu(f, g, it));
          }
        }
      }
      if (swaps) {
        for (std::size_t f1 = 0; f1 < n; ++f1) {
          const int g1 = state.gate_of(f1);
          for (std::size_t f2 = f1 + 1; f2 < n; ++f2) {
            const int g2 = state.gate_of(f2);
            if (g1 == g2 || !state.swap_feasible(f1, f2)) continue;
            const bool tabu = is_tabu(f1, static_cast<std::size_t>(g2), it) ||
                              is_tabu(f2, static_cast<std::size_t>(g1), it);
            consider({true, f1, f2, 0, state.swap_delta(f1, f2)}, tabu);
          }
        }
      }
      if (!pick) break;

      if (pick->swap) {
        const auto g1 = static_cast<std::size_t>(state.gate_of(pick->f1));
        const auto g2 = static_cast<std::size_t>(state.gate_of(pick->f2));
        state.apply_swap(pick->f1, pick->f2);
        tabu_until_[pick->f1 * G + g1] = it + tenure_;
        tabu_until_[pick->f2 * G + g2] = it + tenure_;
      } else {
        const auto g0 = static_cast<std::size_t>(state.gate_of(pick->f1));
        state.apply_move(pick->f1, pick->gate);
        tabu_until_[pick->f1 * G + g0] = it + tenure_;
      }
      ++iterations;

      const double value = state.objective();
      if (value < best_value - 1e-12 * std::max(1.0, std::fabs(best_value))) {
        best_value = value;
        best = state.assignment();
        stale = 0;
      } else {
        ++stale;
      }
      global_best = std::min(global_best, best_value);
      trace.push_back(global_best);
    }
    return best;
  }

private:
  bool is_tabu(std::size_t f, std::size_t g, int it) const {
    return tabu_until_[f * model_.gates() + g] >= it;
  }

  const GateCostModel& model_;
  const SolverConfig& config_;
  Rng& rng_;
  int tenure_;
  std::vector<int> tabu_until_;
};

}  // namespace

TabuResult tabu_search(const Schedule& schedule, const SolverConfig& config,
                       const ConflictCurve& curve, const RampConfig* ramp,
                       const TransferMatrix* transfers, const Assignment* initial) {
  config.validate();
  detail::CostWeights weights;
  if (ramp != nullptr) {
    if (ramp->gate_count() < static_cast<std::size_t>(schedule.gate_count()))
      throw MissingGeometry("ramp has " + std::to_string(ramp->gate_count()) +
                            " gates, schedule uses " + std::to_string(schedule.gate_count()));
    weights = {config.alpha, true, 1.0 - config.alpha};
  }
  const GateCostModel model(schedule, curve, config.buffer_min, weights, ramp, transfers);

  Assignment start;
  if (initial != nullptr) {
    const FeasibilityReport report = is_feasible(schedule, *initial, config.buffer_min);
    if (!report.feasible)
      throw NoFeasibleStart("initial assignment violates the buffer on " +
                            std::to_string(report.violations.size()) + " pair(s)");
    start = *initial;
  } else {
    try {
      start = greedy_assign(schedule, config.buffer_min);
    } catch (const NoFeasibleGate& e) {
      throw NoFeasibleStart(std::string("no feasible starting assignment: ") + e.what());
    }
  }

  Rng rng(config.seed);
  TabuResult result;
  result.initial_objective = model.evaluate(start);
  result.trace.push_back(result.initial_objective);
  double global_best = result.initial_objective;
  result.assignment = start;
  result.objective = result.initial_objective;

  for (int r = 0; r < config.restarts; ++r) {
    Assignment from = start;
    if (r > 0) {
      auto randomized = random_first_fit(schedule, config.buffer_min, rng);
      if (randomized) from = std::move(*randomized);
    }
    TabuRun run(model, config, rng);
    Assignment best = run.run(std::move(from), global_best, result.trace, result.iterations);
    const double value = model.evaluate(best);
    if (value < result.objective - 1e-12 * std::max(1.0, std::fabs(result.objective))) {
      result.objective = value;
      result.assignment = std::move(best);
      result.best_restart = r;
    }
  }
  return result;
}

}  // namespace gatekit
