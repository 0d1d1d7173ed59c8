#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "gatekit/simd/kernels.hpp"

namespace gatekit::simd {
namespace {

bool cpu_has_avx2() {
#if defined(__x86_64__) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

Backend detect() {
  if (const char* env = std::getenv("GATEKIT_SIMD"); env && std::string(env) == "scalar")
    return Backend::scalar;
  return backend_available(Backend::avx2) ? Backend::avx2 : Backend::scalar;
}

std::atomic<Backend>& current() {
  static std::atomic<Backend> backend{detect()};
  return backend;
}

const detail::KernelTable& table() {
  if (current().load(std::memory_order_relaxed) == Backend::avx2)
    return *detail::avx2_table();
  return detail::scalar_table();
}

void check_sizes(std::size_t a, std::size_t b, const char* what) {
  if (a != b) throw std::invalid_argument(std::string(what) + ": span size mismatch");
}

}  // namespace

std::string_view backend_name(Backend backend) {
  return backend == Backend::avx2 ? "avx2" : "scalar";
}

bool backend_available(Backend backend) {
  if (backend == Backend::scalar) return true;
  return detail::avx2_table() != nullptr && cpu_has_avx2();
}

Backend active_backend() { return current().load(std::memory_order_relaxed); }

void set_backend(Backend backend) {
  if (!backend_available(backend))
    throw std::invalid_argument("SIMD backend not available on this CPU: " +
                                std::string(backend_name(backend)));
  current().store(backend, std::memory_order_relaxed);
}

void lognormal_pdf(std::span<const double> x, double mu, double sigma,
                   double shift, std::span<double> out) {
  check_sizes(x.size(), out.size(), "lognormal_pdf");
  table().lognormal_pdf(x.data(), x.size(), mu, sigma, shift, out.data());
}

void scaled_exp(std::span<const double> t, double scale, double rate,
                std::span<double> out) {
  check_sizes(t.size(), out.size(), "scaled_exp");
  table().scaled_exp(t.data(), t.size(), scale, rate, out.data());
}

void separation_row(std::span<const double> arr, std::span<const double> dep,
                    double arr_i, double dep_i, std::span<double> out) {
  check_sizes(arr.size(), dep.size(), "separation_row");
  check_sizes(arr.size(), out.size(), "separation_row");
  table().separation_row(arr.data(), dep.data(), arr.size(), arr_i, dep_i, out.data());
}

void axpy(double alpha, std::span<const double> x, std::span<double> y) {
  check_sizes(x.size(), y.size(), "axpy");
  table().axpy(alpha, x.data(), x.size(), y.data());
}

}  // namespace gatekit::simd
