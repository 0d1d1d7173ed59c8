#include "gatekit/conflict.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>

#include "gatekit/error.hpp"
#include "gatekit/quadrature.hpp"

namespace gatekit {
namespace {

// Unshifted log-normal: the conflict integral works on exp(N(mu, sigma)).
DelayDistribution unshifted(const DelayDistribution& d) { return {d.mu, d.sigma, 0.0}; }

// Breakpoints at exp(mu + k sigma), k integer, restricted to (lo, hi).
std::vector<double> lognormal_breaks(const DelayDistribution& d, double lo, double hi) {
  std::vector<double> breaks{lo};
  for (int k = -6; k <= 6; ++k) {
    const double x = std::exp(d.mu + k * d.sigma);
    if (x > lo && x < hi) breaks.push_back(x);
  }
  breaks.push_back(hi);
  return breaks;
}

class ExcessIntegrator {
public:
  ExcessIntegrator(const DelayDistribution& dist, const ConflictIntegralOptions& options)
      : dist_(unshifted(dist)),
        upper_(dist_.quantile(1.0 - options.tail_probability)),
        options_{options.inner_abs_tol, 1e-12, options.max_panels} {}

  quad::Result operator()(double threshold) {
    const double lo = std::max(0.0, threshold);
    if (!(lo < upper_)) {
      quad::Result empty;
      empty.converged = true;
      return empty;
    }
    auto integrand = [&](std::span<const double> x, std::span<double> out) {
      pdf(dist_, x, out);
      for (std::size_t i = 0; i < x.size(); ++i) out[i] *= x[i] - threshold;
    };
    const auto breaks = lognormal_breaks(dist_, lo, upper_);
    return quad::integrate(integrand, breaks, options_);
  }

  double upper() const { return upper_; }

private:
  DelayDistribution dist_;
  double upper_;
  quad::Options options_;
};

}  // namespace

double expected_excess(const DelayDistribution& dist, double threshold,
                       const ConflictIntegralOptions& options) {
  ExcessIntegrator excess(dist, options);
  const quad::Result r = excess(threshold);
  if (!r.converged)
    throw QuadratureNonConvergence("expected_excess did not converge", r.error);
  return r.value;
}

ConflictIntegral integrate_conflict_duration(const DelayDistribution& dep,
                                             const DelayDistribution& arr, double sep,
                                             const ConflictIntegralOptions& options) {
  const double z = sep - dep.shift_c + arr.shift_c;
  const DelayDistribution arr0 = unshifted(arr);
  const double y_max = arr0.quantile(1.0 - options.tail_probability);
  ExcessIntegrator excess(dep, options);

  double inner_error = 0.0;
  std::size_t evaluations = 0;
  bool inner_ok = true;
  std::array<double, 15> density{};
  auto integrand = [&](std::span<const double> y, std::span<double> out) {
    pdf(arr0, y, std::span<double>(density.data(), y.size()));
    for (std::size_t i = 0; i < y.size(); ++i) {
      if (density[i] == 0.0) {
        out[i] = 0.0;
        continue;
      }
      const quad::Result r = excess(y[i] + z);
      inner_ok = inner_ok && r.converged;
      inner_error = std::max(inner_error, r.error);
      evaluations += r.evaluations;
      out[i] = density[i] * r.value;
    }
  };

  auto breaks = lognormal_breaks(arr0, 0.0, y_max);
  // The inner lower limit switches from 0 to y + z at y = -z.
  if (-z > 0.0 && -z < y_max) {
    breaks.push_back(-z);
    std::sort(breaks.begin(), breaks.end());
  }
  const quad::Result outer =
      quad::integrate(integrand, breaks, {options.abs_tol, 1e-12, options.max_panels});
  const double error = outer.error + inner_error;
  if (!outer.converged || !inner_ok)
    throw QuadratureNonConvergence(
        "conflict integral did not converge at sep=" + std::to_string(sep), error);
  return {std::max(0.0, outer.value), error, evaluations + outer.evaluations};
}

ExponentialFit fit_exponential(std::span<const double> seps, std::span<const double> values) {
  if (seps.size() != values.size() || seps.size() < 2)
    throw FitFailure("fit_exponential: need matching grids of at least two points");
  if (std::all_of(values.begin(), values.end(), [](double v) { return v < 1e-9; }))
    throw FitFailure("fit_exponential: all values are below 1e-9");

  // Seed from a log-linear regression over the positive values.
  double n = 0, sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < seps.size(); ++i) {
    if (!(values[i] > 1e-12)) continue;
    const double ly = std::log(values[i]);
    n += 1;
    sx += seps[i];
    sy += ly;
    sxx += seps[i] * seps[i];
    sxy += seps[i] * ly;
  }
  double a = 1.0, b = 0.9;
  if (n >= 2 && n * sxx - sx * sx > 0.0) {
    const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    a = std::exp((sy - slope * sx) / n);
    b = std::exp(slope);
  }
  if (!(b > 0.0 && b < 1.0)) b = 0.9;

  auto sse_at = [&](double aa, double bb) {
    double s = 0.0;
    for (std::size_t i = 0; i < seps.size(); ++i) {
      const double r = aa * std::pow(bb, seps[i]) - values[i];
      s += r * r;
    }
    return s;
  };

  double lambda = 1e-3;
  double sse = sse_at(a, b);
  ExponentialFit fit;
  for (fit.iterations = 0; fit.iterations < 500; ++fit.iterations) {
    double jaa = 0, jab = 0, jbb = 0, ga = 0, gb = 0;
    for (std::size_t i = 0; i < seps.size(); ++i) {
      const double p = std::pow(b, seps[i]);
      const double da = p;
      const double db = seps[i] == 0.0 ? 0.0 : a * seps[i] * std::pow(b, seps[i] - 1.0);
      const double r = a * p - values[i];
      jaa += da * da;
      jab += da * db;
      jbb += db * db;
      ga += da * r;
      gb += db * r;
    }
    bool accepted = false;
    double step_a = 0, step_b = 0;
    for (int tries = 0; tries < 30 && !accepted; ++tries) {
      const double m11 = jaa * (1.0 + lambda);
      const double m22 = jbb * (1.0 + lambda);
      const double det = m11 * m22 - jab * jab;
      if (!(std::abs(det) > 0.0)) {
        lambda *= 10.0;
        continue;
      }
      step_a = -(m22 * ga - jab * gb) / det;
      step_b = -(m11 * gb - jab * ga) / det;
      const double na = a + step_a;
      const double nb = b + step_b;
      if (nb > 0.0 && nb < 1.0) {
        const double nsse = sse_at(na, nb);
        if (nsse <= sse) {
          a = na;
          b = nb;
          sse = nsse;
          lambda = std::max(lambda / 10.0, 1e-12);
          accepted = true;
          break;
        }
      }
      lambda *= 10.0;
    }
    if (!accepted) break;
    if (std::abs(step_a) <= 1e-14 * std::abs(a) && std::abs(step_b) <= 1e-15) break;
  }
  if (!(a >= 0.0) || !(b > 0.0 && b < 1.0))
    throw FitFailure("fit_exponential: fitted base outside (0, 1)");
  fit.a = a;
  fit.b = b;
  return fit;
}

ConflictCurve fit_conflict_curve(const DelayDistribution& dep, const DelayDistribution& arr,
                                 std::span<const double> sep_grid,
                                 const ConflictIntegralOptions& options) {
  if (sep_grid.size() < 5)
    throw FitFailure("fit_conflict_curve: separation grid needs at least 5 points");
  const auto [lo, hi] = std::minmax_element(sep_grid.begin(), sep_grid.end());
  if (*hi - *lo < 60.0)
    throw FitFailure("fit_conflict_curve: separation grid must span at least 60 minutes");
  std::vector<double> values;
  values.reserve(sep_grid.size());
  for (double s : sep_grid) values.push_back(expected_conflict_duration_exact(dep, arr, s, options));
  const ExponentialFit fit = fit_exponential(sep_grid, values);
  return {fit.a, fit.b, dep, arr};
}

std::vector<double> default_separation_grid() {
  std::vector<double> grid;
  for (int s = 0; s <= 120; s += 5) grid.push_back(s);
  return grid;
}

}  // namespace gatekit
