#include <cmath>
#include <numbers>

#include "gatekit/simd/kernels.hpp"

namespace gatekit::simd::detail {
namespace {

void lognormal_pdf_scalar(const double* x, std::size_t n, double mu,
                          double sigma, double shift, double* out) {
  const double inv_norm = 1.0 / (sigma * std::sqrt(2.0 * std::numbers::pi));
  const double inv_two_var = 1.0 / (2.0 * sigma * sigma);
  for (std::size_t i = 0; i < n; ++i) {
    const double u = x[i] - shift;
    if (!(u > 0.0)) {
      out[i] = 0.0;
      continue;
    }
    const double t = std::log(u);
    const double d = t - mu;
    out[i] = inv_norm * std::exp(-d * d * inv_two_var - t);
  }
}

void scaled_exp_scalar(const double* t, std::size_t n, double scale,
                       double rate, double* out) {
  for (std::size_t i = 0; i < n; ++i) out[i] = scale * std::exp(rate * t[i]);
}

void separation_row_scalar(const double* arr, const double* dep, std::size_t n,
                           double arr_i, double dep_i, double* out) {
  for (std::size_t k = 0; k < n; ++k)
    out[k] = dep_i < dep[k] || (dep_i == dep[k] && arr_i <= arr[k]) ? arr[k] - dep_i
                                                                     : arr_i - dep[k];
}

void axpy_scalar(double alpha, const double* x, std::size_t n, double* y) {
  for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

}  // namespace

const KernelTable& scalar_table() {
  static const KernelTable table{lognormal_pdf_scalar, scaled_exp_scalar,
                                 separation_row_scalar, axpy_scalar};
  return table;
}

}  // namespace gatekit::simd::detail
