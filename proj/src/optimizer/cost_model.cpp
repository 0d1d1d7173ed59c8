#include "gatekit/optimizer/cost_model.hpp"

#include <cmath>
#include <span>

#include "gatekit/error.hpp"
#include "gatekit/simd/kernels.hpp"

namespace gatekit::detail {

GateCostModel::GateCostModel(const Schedule& schedule, const ConflictCurve& curve,
                             double buffer_min, const CostWeights& weights,
                             const RampConfig* ramp, const TransferMatrix* transfers)
    : n_(schedule.size()), g_(static_cast<std::size_t>(schedule.gate_count())) {
  std::vector<double> arr(n_), dep(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    arr[i] = schedule[i].sched_arr;
    dep[i] = schedule[i].sched_dep;
  }

  pair_cost_.assign(n_ * n_, 0.0);
  conflict_.assign(n_ * n_, 0);
  std::vector<double> sep(n_);
  const double rate = std::log(curve.base_b);
  for (std::size_t i = 0; i < n_; ++i) {
    std::span<double> row(pair_cost_.data() + i * n_, n_);
    simd::separation_row(arr, dep, arr[i], dep[i], sep);
    simd::scaled_exp(sep, curve.intercept_a * weights.robust, rate, row);
    for (std::size_t k = 0; k < n_; ++k) {
      conflict_[i * n_ + k] = k != i && sep[k] < buffer_min;
      if (weights.pax_weighted)
        row[k] *= leaves_first(schedule[i], schedule[k]) ? schedule[k].pax_in
                                                          : schedule[i].pax_in;
    }
    row[i] = 0.0;
  }

  if (ramp == nullptr || weights.transit == 0.0) return;
  if (ramp->gate_count() < g_)
    throw MissingGeometry("ramp has " + std::to_string(ramp->gate_count()) +
                          " gates, schedule uses " + std::to_string(g_));
  const double scale = weights.transit / ramp->walk_speed;
  unary_.assign(n_ * g_, 0.0);
  for (std::size_t f = 0; f < n_; ++f)
    for (std::size_t g = 0; g < g_; ++g)
      unary_[f * g_ + g] = scale * (schedule[f].pax_origin * ramp->checkpoint_dist[g] +
                                    schedule[f].pax_dest * ramp->baggage_dist[g]);
  distance_.assign(g_ * g_, 0.0);
  for (std::size_t j = 0; j < g_; ++j)
    for (std::size_t l = 0; l < g_; ++l) distance_[j * g_ + l] = ramp->distance(j, l);
  partners_.assign(n_, {});
  if (transfers == nullptr) return;
  transfer_coef_.assign(n_ * n_, 0.0);
  for (const auto& e : transfers->entries()) {
    if (e.i >= n_ || e.k >= n_) throw BadDimensions("transfer entry outside the schedule");
    if (e.pax == 0) continue;
    transfer_coef_[e.i * n_ + e.k] = transfer_coef_[e.k * n_ + e.i] = scale * e.pax;
    partners_[e.i].push_back(e.k);
    partners_[e.k].push_back(e.i);
  }
}

double GateCostModel::evaluate(const Assignment& assignment) const {
  const auto& x = assignment.gate_of;
  double total = 0.0;
  for (std::size_t i = 0; i < n_; ++i) {
    const auto gi = static_cast<std::size_t>(x[i]);
    total += unary(i, gi);
    for (std::size_t k = i + 1; k < n_; ++k) {
      if (x[k] == x[i]) total += pair_cost_[i * n_ + k];
      if (!transfer_coef_.empty())
        total += transfer_coef_[i * n_ + k] * distance(gi, static_cast<std::size_t>(x[k]));
    }
  }
  return total;
}

GateCostState::GateCostState(const GateCostModel& model, Assignment assignment)
    : model_(&model), assignment_(std::move(assignment)) {
  const std::size_t n = model.n_, g = model.g_;
  if (assignment_.gate_of.size() != n) throw IncompleteAssignment("assignment size mismatch");
  same_gate_.assign(g * n, 0.0);
  clashes_.assign(g * n, 0);
  if (!model.transfer_coef_.empty()) transfer_.assign(n * g, 0.0);
  for (std::size_t f = 0; f < n; ++f) {
    const int gf = assignment_.gate_of[f];
    if (gf < 0 || static_cast<std::size_t>(gf) >= g)
      throw IncompleteAssignment("gate index out of range");
    const auto row = static_cast<std::size_t>(gf) * n;
    simd::axpy(1.0, std::span<const double>(model.pair_cost_.data() + f * n, n),
               std::span<double>(same_gate_.data() + row, n));
    for (std::size_t k = 0; k < n; ++k) clashes_[row + k] += model.conflict_[f * n + k];
  }
  if (!model.transfer_coef_.empty()) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k : model.partners_[i]) {
        const auto gk = static_cast<std::size_t>(assignment_.gate_of[k]);
        simd::axpy(model.transfer_coef_[i * n + k],
                   std::span<const double>(model.distance_.data() + gk * g, g),
                   std::span<double>(transfer_.data() + i * g, g));
      }
  }
  objective_ = model.evaluate(assignment_);
}

bool GateCostState::feasible() const {
  const std::size_t n = model_->n_;
  for (std::size_t f = 0; f < n; ++f)
    if (clashes_[static_cast<std::size_t>(assignment_.gate_of[f]) * n + f] != 0) return false;
  return true;
}

bool GateCostState::move_feasible(std::size_t f, int g) const {
  return clashes_[static_cast<std::size_t>(g) * model_->n_ + f] == 0;
}

double GateCostState::move_delta(std::size_t f, int g) const {
  const int g0 = assignment_.gate_of[f];
  if (g == g0) return 0.0;
  const std::size_t n = model_->n_, G = model_->g_;
  const auto to = static_cast<std::size_t>(g), from = static_cast<std::size_t>(g0);
  double d = same_gate_[to * n + f] - same_gate_[from * n + f];
  d += model_->unary(f, to) - model_->unary(f, from);
  if (!transfer_.empty()) d += transfer_[f * G + to] - transfer_[f * G + from];
  return d;
}

bool GateCostState::swap_feasible(std::size_t f1, std::size_t f2) const {
  const std::size_t n = model_->n_;
  const auto g1 = static_cast<std::size_t>(assignment_.gate_of[f1]);
  const auto g2 = static_cast<std::size_t>(assignment_.gate_of[f2]);
  if (g1 == g2) return true;
  const int c12 = model_->conflict_[f1 * n + f2];
  return clashes_[g2 * n + f1] - c12 == 0 && clashes_[g1 * n + f2] - c12 == 0;
}

double GateCostState::swap_delta(std::size_t f1, std::size_t f2) const {
  const std::size_t n = model_->n_, G = model_->g_;
  const auto g1 = static_cast<std::size_t>(assignment_.gate_of[f1]);
  const auto g2 = static_cast<std::size_t>(assignment_.gate_of[f2]);
  if (g1 == g2) return 0.0;
  const double w12 = model_->pair_cost_[f1 * n + f2];
  double d = (same_gate_[g2 * n + f1] - w12 - same_gate_[g1 * n + f1]) +
             (same_gate_[g1 * n + f2] - w12 - same_gate_[g2 * n + f2]);
  d += model_->unary(f1, g2) - model_->unary(f1, g1) + model_->unary(f2, g1) -
       model_->unary(f2, g2);
  if (!transfer_.empty())
    d += transfer_[f1 * G + g2] + transfer_[f2 * G + g1] - transfer_[f1 * G + g1] -
         transfer_[f2 * G + g2] + 2.0 * model_->transfer_coef(f1, f2) * model_->distance(g1, g2);
  return d;
}

void GateCostState::apply_move(std::size_t f, int g) {
  const int g0 = assignment_.gate_of[f];
  if (g == g0) return;
  objective_ += move_delta(f, g);
  relocate(f, g0, g);
}

void GateCostState::apply_swap(std::size_t f1, std::size_t f2) {
  const int g1 = assignment_.gate_of[f1];
  const int g2 = assignment_.gate_of[f2];
  if (g1 == g2) return;
  objective_ += swap_delta(f1, f2);
  relocate(f1, g1, g2);
  relocate(f2, g2, g1);
}

void GateCostState::relocate(std::size_t f, int from, int to) {
  const std::size_t n = model_->n_, G = model_->g_;
  const auto src = static_cast<std::size_t>(from), dst = static_cast<std::size_t>(to);
  const std::span<const double> w(model_->pair_cost_.data() + f * n, n);
  simd::axpy(-1.0, w, std::span<double>(same_gate_.data() + src * n, n));
  simd::axpy(1.0, w, std::span<double>(same_gate_.data() + dst * n, n));
  const std::uint8_t* conf = model_->conflict_.data() + f * n;
  std::int32_t* c_src = clashes_.data() + src * n;
  std::int32_t* c_dst = clashes_.data() + dst * n;
  for (std::size_t k = 0; k < n; ++k) {
    c_src[k] -= conf[k];
    c_dst[k] += conf[k];
  }
  if (!transfer_.empty()) {
    const std::span<const double> d_src(model_->distance_.data() + src * G, G);
    const std::span<const double> d_dst(model_->distance_.data() + dst * G, G);
    for (std::size_t k : model_->partners_[f]) {
      const double c = model_->transfer_coef_[k * n + f];
      std::span<double> row(transfer_.data() + k * G, G);
      simd::axpy(-c, d_src, row);
      simd::axpy(c, d_dst, row);
    }
  }
  assignment_.gate_of[f] = to;
}

}  // namespace gatekit::detail
