#include "gatekit/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <queue>
#include <stdexcept>
#include <vector>

namespace gatekit::quad {
namespace {

// Kronrod abscissae on [0, 1]; odd indices are the embedded Gauss nodes.
constexpr std::array<double, 8> kNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kKronrod = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kGauss = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a, b, value, error;
  bool operator<(const Panel& other) const { return error < other.error; }
};

class PanelEvaluator {
public:
  explicit PanelEvaluator(const BatchIntegrand& f) : f_(f) {}

  Panel operator()(double a, double b) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    for (std::size_t j = 0; j < 7; ++j) {
      nodes_[2 * j] = center - half * kNodes[j];
      nodes_[2 * j + 1] = center + half * kNodes[j];
    }
    nodes_[14] = center;
    f_(nodes_, values_);
    evaluations += 15;

    double kronrod = kKronrod[7] * values_[14];
    double gauss = kGauss[3] * values_[14];
    for (std::size_t j = 0; j < 7; ++j) {
      const double pair = values_[2 * j] + values_[2 * j + 1];
      kronrod += kKronrod[j] * pair;
      if (j % 2 == 1) gauss += kGauss[j / 2] * pair;
    }
    return Panel{a, b, kronrod * half, std::abs((kronrod - gauss) * half)};
  }

  std::size_t evaluations = 0;

private:
  const BatchIntegrand& f_;
  std::array<double, 15> nodes_{};
  std::array<double, 15> values_{};
};

}  // namespace

Result integrate(const BatchIntegrand& f, std::span<const double> breaks,
                 const Options& options) {
  if (breaks.size() < 2) throw std::invalid_argument("integrate: need two breakpoints");
  PanelEvaluator eval(f);
  std::priority_queue<Panel> panels;
  double value = 0.0;
  double error = 0.0;
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    if (!(breaks[i + 1] > breaks[i])) continue;
    const Panel p = eval(breaks[i], breaks[i + 1]);
    value += p.value;
    error += p.error;
    panels.push(p);
  }

  auto target = [&] { return std::max(options.abs_tol, options.rel_tol * std::abs(value)); };
  while (!panels.empty() && error > target() && panels.size() < options.max_panels) {
    const Panel worst = panels.top();
    panels.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) {
      // Panel collapsed to adjacent doubles; cannot refine further.
      panels.push(worst);
      break;
    }
    const Panel left = eval(worst.a, mid);
    const Panel right = eval(mid, worst.b);
    value += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    panels.push(left);
    panels.push(right);
  }

  // Re-sum to shed the drift from incremental updates.
  Result result;
  result.evaluations = eval.evaluations;
  while (!panels.empty()) {
    result.value += panels.top().value;
    result.error += panels.top().error;
    panels.pop();
  }
  result.converged = result.error <= std::max(options.abs_tol, options.rel_tol * std::abs(result.value));
  return result;
}

Result integrate(const BatchIntegrand& f, double a, double b, const Options& options) {
  const std::array<double, 2> breaks{a, b};
  return integrate(f, breaks, options);
}

}  // namespace gatekit::quad
