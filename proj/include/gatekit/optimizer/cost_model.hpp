#pragma once
// Quadratic gate-assignment cost with incremental move/swap evaluation.
//
// cost(x) = sum_f U[f][g(f)] + sum_{i<k, g(i)=g(k)} W[i][k]
//         + sum_{i<k} c[i][k] * D[g(i)][g(k)]
//
// U holds checkpoint/baggage walking, W the (scaled) conflict surrogate and
// c the scaled transfer passengers.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "gatekit/optimizer.hpp"

namespace gatekit::detail {

struct CostWeights {
  double robust = 1.0;
  bool pax_weighted = false;
  double transit = 0.0;
};

class GateCostModel {
public:
  GateCostModel(const Schedule& schedule, const ConflictCurve& curve, double buffer_min,
                const CostWeights& weights, const RampConfig* ramp = nullptr,
                const TransferMatrix* transfers = nullptr);

  std::size_t flights() const { return n_; }
  std::size_t gates() const { return g_; }
  double pair_cost(std::size_t i, std::size_t k) const { return pair_cost_[i * n_ + k]; }
  bool conflicts(std::size_t i, std::size_t k) const { return conflict_[i * n_ + k] != 0; }
  double unary(std::size_t f, std::size_t g) const {
    return unary_.empty() ? 0.0 : unary_[f * g_ + g];
  }
  double transfer_coef(std::size_t i, std::size_t k) const {
    return transfer_coef_.empty() ? 0.0 : transfer_coef_[i * n_ + k];
  }
  double distance(std::size_t j, std::size_t l) const {
    return distance_.empty() ? 0.0 : distance_[j * g_ + l];
  }
  bool has_transit() const { return !unary_.empty(); }

  /// Full evaluation, O(n^2).
  double evaluate(const Assignment& assignment) const;

private:
  friend class GateCostState;
  std::size_t n_ = 0;
  std::size_t g_ = 0;
  std::vector<double> pair_cost_;     // n x n, zero diagonal
  std::vector<std::uint8_t> conflict_;  // n x n
  std::vector<double> unary_;         // n x g
  std::vector<double> transfer_coef_;  // n x n
  std::vector<std::vector<std::size_t>> partners_;
  std::vector<double> distance_;      // g x g
};

/// Running tables for one assignment:
///   same_gate[g][i]  = sum of W[i][k] over k on gate g
///   clashes[g][i]    = number of k on gate g that conflict with i
///   transfer[i][g]   = sum of c[i][k] D[g][g(k)] over transfer partners k
class GateCostState {
public:
  GateCostState(const GateCostModel& model, Assignment assignment);

  const Assignment& assignment() const { return assignment_; }
  int gate_of(std::size_t f) const { return assignment_.gate_of[f]; }
  double objective() const { return objective_; }
  bool feasible() const;

  bool move_feasible(std::size_t f, int g) const;
  double move_delta(std::size_t f, int g) const;
  bool swap_feasible(std::size_t f1, std::size_t f2) const;
  double swap_delta(std::size_t f1, std::size_t f2) const;

  void apply_move(std::size_t f, int g);
  void apply_swap(std::size_t f1, std::size_t f2);

private:
  const GateCostModel* model_;
  Assignment assignment_;
  std::vector<double> same_gate_;   // g x n
  std::vector<std::int32_t> clashes_;  // g x n
  std::vector<double> transfer_;    // n x g
  double objective_ = 0.0;

  void relocate(std::size_t f, int from, int to);
};

}  // namespace gatekit::detail
