#include "gatekit/delay_model.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>

#include <boost/math/special_functions/erf.hpp>

#include "gatekit/error.hpp"
#include "gatekit/simd/kernels.hpp"

namespace gatekit {
namespace {

constexpr std::size_t kMinSamples = 30;
constexpr double kMinSigma = 1e-9;

struct Profile {
  double loglik;
  double mu;
  double sigma;
};

// Log-likelihood with (mu, sigma) at their closed-form MLE for a fixed shift.
Profile profile_at(std::span<const double> x, double shift) {
  const auto n = static_cast<double>(x.size());
  double sum = 0.0;
  for (double v : x) sum += std::log(v - shift);
  const double mu = sum / n;
  double ss = 0.0;
  for (double v : x) {
    const double d = std::log(v - shift) - mu;
    ss += d * d;
  }
  const double sigma = std::sqrt(ss / n);
  if (!(sigma > 0.0)) return {-std::numeric_limits<double>::infinity(), mu, sigma};
  const double loglik =
      -sum - n * std::log(sigma) - 0.5 * n * (std::log(2.0 * std::numbers::pi) + 1.0);
  return {loglik, mu, sigma};
}

}  // namespace

double DelayDistribution::mean() const {
  return std::exp(mu + 0.5 * sigma * sigma) + shift_c;
}

double DelayDistribution::quantile(double p) const {
  const double z = -std::numbers::sqrt2 * boost::math::erfc_inv(2.0 * p);
  return std::exp(mu + sigma * z) + shift_c;
}

double pdf(const DelayDistribution& dist, double x) {
  const double u = x - dist.shift_c;
  if (!(u > 0.0)) return 0.0;
  const double sigma = std::max(dist.sigma, kMinSigma);
  const double t = std::log(u);
  const double d = (t - dist.mu) / sigma;
  return std::exp(-0.5 * d * d) / (u * sigma * std::sqrt(2.0 * std::numbers::pi));
}

void pdf(const DelayDistribution& dist, std::span<const double> x, std::span<double> out) {
  simd::lognormal_pdf(x, dist.mu, std::max(dist.sigma, kMinSigma), dist.shift_c, out);
}

DelayDistribution fit_shifted_lognormal(std::span<const double> delays) {
  if (delays.size() < kMinSamples)
    throw TooFewSamples("fit_shifted_lognormal: need at least 30 samples, got " +
                        std::to_string(delays.size()));
  const auto [lo_it, hi_it] = std::minmax_element(delays.begin(), delays.end());
  const double lo = *lo_it;
  const double spread = *hi_it - lo;
  if (!(spread > 0.0)) throw DegenerateData("fit_shifted_lognormal: all samples are equal");

  // Search the gap between the sample minimum and the shift on a log scale:
  // the gap spans many decades across realistic delay data.
  const double min_gap = 1e-6 * std::max(1.0, spread);
  const double max_gap = 200.0;
  const double log_lo = std::log(min_gap);
  const double log_hi = std::log(max_gap);
  auto loglik_at = [&](double log_gap) { return profile_at(delays, lo - std::exp(log_gap)).loglik; };

  constexpr int kGrid = 240;
  int best = 0;
  double best_ll = -std::numeric_limits<double>::infinity();
  for (int i = 0; i <= kGrid; ++i) {
    const double g = log_lo + (log_hi - log_lo) * i / kGrid;
    const double ll = loglik_at(g);
    if (ll > best_ll) {
      best_ll = ll;
      best = i;
    }
  }

  // Golden-section refinement inside the bracketing grid cells.
  const double step = (log_hi - log_lo) / kGrid;
  double a = log_lo + step * std::max(best - 1, 0);
  double b = log_lo + step * std::min(best + 1, kGrid);
  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - invphi * (b - a);
  double d = a + invphi * (b - a);
  double fc = loglik_at(c);
  double fd = loglik_at(d);
  for (int iter = 0; iter < 100 && (b - a) > 1e-12; ++iter) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - invphi * (b - a);
      fc = loglik_at(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + invphi * (b - a);
      fd = loglik_at(d);
    }
  }
  const double log_gap = 0.5 * (a + b);
  const double shift = lo - std::exp(log_gap);
  const Profile p = profile_at(delays, shift);
  return {p.mu, p.sigma, shift};
}

double sample_delay(const DelayDistribution& dist, Rng& rng) {
  const double value = std::exp(dist.mu + dist.sigma * rng.normal()) + dist.shift_c;
  if (value > dist.shift_c) return value;
  return std::nextafter(dist.shift_c, std::numeric_limits<double>::infinity());
}

TurnFit fit_turn_model(std::span<const TurnObservation> pairs) {
  if (pairs.size() < kMinSamples)
    throw TooFewSamples("fit_turn_model: need at least 30 pairs, got " +
                        std::to_string(pairs.size()));
  const auto n = static_cast<double>(pairs.size());
  double y_mean = 0.0;
  for (const auto& p : pairs) y_mean += p.dep_delay;
  y_mean /= n;
  double sst = 0.0;
  for (const auto& p : pairs) sst += (p.dep_delay - y_mean) * (p.dep_delay - y_mean);

  TurnFit best;
  best.observations = pairs.size();
  best.sse = std::numeric_limits<double>::infinity();
  const double tie_tol = 1e-12 * std::max(sst, 1.0);

  std::vector<double> u(pairs.size());
  for (int m = 0; m <= 200; ++m) {
    double u_mean = 0.0;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      u[i] = std::max(0.0, m - pairs[i].available_turn());
      u_mean += u[i];
    }
    u_mean /= n;
    double suu = 0.0;
    double suy = 0.0;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      suu += (u[i] - u_mean) * (u[i] - u_mean);
      suy += (u[i] - u_mean) * (pairs[i].dep_delay - y_mean);
    }
    const bool identified = suu > 0.0;
    const double b = identified ? std::max(0.0, suy / suu) : 0.0;
    const double c = y_mean - b * u_mean;
    double sse = 0.0;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      const double r = pairs[i].dep_delay - c - b * u[i];
      sse += r * r;
    }
    if (sse < best.sse - tie_tol) {
      best.sse = sse;
      best.slope_identified = identified;
      best.model = TurnModel{c, b, static_cast<double>(m), 0.0};
    }
  }
  best.model.residual_sigma = std::sqrt(best.sse / n);
  return best;
}

double propagate_delay(const TurnModel& model, double scheduled_dep,
                       double actual_arr, double residual) {
  const double available = scheduled_dep - actual_arr;
  return model.fixed_delay_C +
         model.propagation_ratio_b * std::max(0.0, model.min_turn_m - available) + residual;
}

}  // namespace gatekit
