#pragma once
// Expected gate-conflict duration as a function of planned gate separation.

#include <cmath>
#include <span>
#include <vector>

#include "gatekit/delay_model.hpp"

namespace gatekit {

/// Exponential surrogate a * b^sep of the expected conflict duration,
/// together with the delay distributions it was fitted from.
struct ConflictCurve {
  double intercept_a = 0.0;
  double base_b = 0.5;
  DelayDistribution dep_dist;
  DelayDistribution arr_dist;

  /// Surrogate reported for NWA at DTW, March 2006.
  static ConflictCurve dtw_reported() {
    return {11.63, 0.9476, DelayDistribution::dtw_departure(), DelayDistribution::dtw_arrival()};
  }
};

struct ConflictIntegralOptions {
  /// Each log-normal is truncated at its (1 - tail_probability) quantile.
  double tail_probability = 1e-8;
  /// Absolute tolerance of the outer integral, minutes.
  double abs_tol = 1e-6;
  /// Absolute tolerance of each inner integral, minutes.
  double inner_abs_tol = 1e-8;
  std::size_t max_panels = 400;
};

struct ConflictIntegral {
  double value = 0.0;
  double error_estimate = 0.0;
  std::size_t evaluations = 0;
};

/// E[(X - t)^+] for X ~ exp(N(mu, sigma)) (shift ignored), integrated
/// numerically over x in (max(0, t), upper quantile).
double expected_excess(const DelayDistribution& dist, double threshold,
                       const ConflictIntegralOptions& options = {});

/// Double integral of (x - y - z) f_dep(x) f_arr(y) over x > y + z, with
/// z = sep - c_dep + c_arr and both densities unshifted.
/// Throws QuadratureNonConvergence.
ConflictIntegral integrate_conflict_duration(const DelayDistribution& dep,
                                             const DelayDistribution& arr, double sep,
                                             const ConflictIntegralOptions& options = {});

inline double expected_conflict_duration_exact(const DelayDistribution& dep,
                                               const DelayDistribution& arr, double sep,
                                               const ConflictIntegralOptions& options = {}) {
  return integrate_conflict_duration(dep, arr, sep, options).value;
}

struct ExponentialFit {
  double a = 0.0;
  double b = 0.0;
  int iterations = 0;
};

/// Least squares of a * b^s against `values` in linear space
/// (Levenberg-Marquardt seeded by a log-linear fit). Throws FitFailure.
ExponentialFit fit_exponential(std::span<const double> seps, std::span<const double> values);

/// Evaluates the exact integral on `sep_grid` and fits the surrogate.
/// The grid needs >= 5 points spanning >= 60 minutes. Throws FitFailure.
ConflictCurve fit_conflict_curve(const DelayDistribution& dep, const DelayDistribution& arr,
                                 std::span<const double> sep_grid,
                                 const ConflictIntegralOptions& options = {});

/// Separations 0, 5, ..., 120.
std::vector<double> default_separation_grid();

inline double expected_conflict_duration_fast(const ConflictCurve& curve, double sep) {
  return curve.intercept_a * std::pow(curve.base_b, sep);
}

}  // namespace gatekit
