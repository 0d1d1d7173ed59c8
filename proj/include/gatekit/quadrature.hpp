#pragma once

#include <cstddef>
#include <functional>
#include <span>

namespace gatekit::quad {

/// Fills `values[i] = f(nodes[i])` for a whole panel of nodes at once.
using BatchIntegrand =
    std::function<void(std::span<const double> nodes, std::span<double> values)>;

struct Options {
  double abs_tol = 1e-8;
  double rel_tol = 1e-10;
  std::size_t max_panels = 400;
};

struct Result {
  double value = 0.0;
  double error = 0.0;
  std::size_t evaluations = 0;
  bool converged = false;
};

/// Globally adaptive 15-point Gauss-Kronrod over the panels delimited by
/// `breaks` (sorted, at least two entries). The worst panel is bisected
/// until the summed |K15 - G7| estimate meets max(abs_tol, rel_tol*|value|).
/// Never throws on non-convergence; callers inspect `converged`.
Result integrate(const BatchIntegrand& f, std::span<const double> breaks,
                 const Options& options = {});

Result integrate(const BatchIntegrand& f, double a, double b,
                 const Options& options = {});

}  // namespace gatekit::quad
