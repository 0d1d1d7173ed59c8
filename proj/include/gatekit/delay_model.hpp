#pragma once
// Shifted log-normal gate-delay distributions and the piecewise-linear
// turn model that maps available turn time to departure delay.

#include <cstddef>
#include <span>
#include <vector>

#include "gatekit/rng.hpp"

namespace gatekit {

/// Delay in minutes distributed as exp(N(mu, sigma)) + shift_c.
struct DelayDistribution {
  double mu = 0.0;
  double sigma = 1.0;
  double shift_c = 0.0;

  /// Departure delays fitted to NWA at DTW, March 2006.
  static DelayDistribution dtw_departure() { return {1.802, 1.242, -5.275}; }
  /// Arrival delays fitted to NWA at DTW, March 2006.
  static DelayDistribution dtw_arrival() { return {3.812, 0.2814, -49.0}; }

  /// Mean of the shifted distribution.
  double mean() const;
  /// Quantile of the shifted distribution, p in (0, 1).
  double quantile(double p) const;

  bool operator==(const DelayDistribution&) const = default;
};

/// dly_d = C + b * max(0, m - available_turn) + e, with e ~ N(0, residual_sigma).
struct TurnModel {
  double fixed_delay_C = 0.0;
  double propagation_ratio_b = 0.0;
  double min_turn_m = 0.0;
  double residual_sigma = 0.0;

  /// Turn model fitted to NWA at DTW, March 2006. The residual spread is not
  /// reported with the fit; 20 minutes is this library's default.
  static TurnModel dtw() { return {3.379, 0.96, 48.0, 20.0}; }

  bool operator==(const TurnModel&) const = default;
};

/// Density at x; zero on (-inf, shift_c]. Sigma is clamped to >= 1e-9.
double pdf(const DelayDistribution& dist, double x);
/// Batched density through the active SIMD backend.
void pdf(const DelayDistribution& dist, std::span<const double> x, std::span<double> out);

/// Maximum-likelihood fit by profiling the shift: for each candidate shift
/// the log-normal MLE of (mu, sigma) is closed form, and the profile
/// likelihood is maximised over shift in (min - 200, min - eps).
/// Throws TooFewSamples (< 30) or DegenerateData (zero spread).
DelayDistribution fit_shifted_lognormal(std::span<const double> delays);

/// One draw; always strictly greater than shift_c.
double sample_delay(const DelayDistribution& dist, Rng& rng);

struct TurnObservation {
  double scheduled_dep = 0.0;
  double actual_arr = 0.0;
  double dep_delay = 0.0;

  double available_turn() const { return scheduled_dep - actual_arr; }
};

struct TurnFit {
  TurnModel model;
  /// False when no observation had available turn below the chosen m, so
  /// the propagation ratio could not be estimated and was set to 0.
  bool slope_identified = false;
  std::size_t observations = 0;
  double sse = 0.0;
};

/// Least-squares fit with an exhaustive integer breakpoint search, m in [0, 200].
/// Throws TooFewSamples (< 30).
TurnFit fit_turn_model(std::span<const TurnObservation> pairs);

double propagate_delay(const TurnModel& model, double scheduled_dep,
                       double actual_arr, double residual);

}  // namespace gatekit
