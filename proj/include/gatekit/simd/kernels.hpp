#pragma once
// Data-parallel inner loops with a scalar reference and an AVX2 variant.
//
// The active backend is picked once at startup from CPUID; setting the
// environment variable GATEKIT_SIMD=scalar forces the reference path.
// Every public entry point below dispatches through the active backend.

#include <cstddef>
#include <span>
#include <string_view>

namespace gatekit::simd {

enum class Backend { scalar, avx2 };

std::string_view backend_name(Backend backend);
bool backend_available(Backend backend);
Backend active_backend();
/// Overrides the automatic choice. Throws std::invalid_argument if the CPU
/// cannot run `backend`.
void set_backend(Backend backend);

/// out[i] = density of exp(N(mu, sigma)) + shift at x[i]; 0 where x[i] <= shift.
void lognormal_pdf(std::span<const double> x, double mu, double sigma,
                   double shift, std::span<double> out);

/// out[i] = scale * exp(rate * t[i]).
void scaled_exp(std::span<const double> t, double scale, double rate,
                std::span<double> out);

/// Gate separation of occupancy (arr_i, dep_i) against every (arr[k], dep[k]):
/// arr[k] - dep_i if occupancy i leaves first (ties broken by earlier
/// arrival), else arr_i - dep[k].
void separation_row(std::span<const double> arr, std::span<const double> dep,
                    double arr_i, double dep_i, std::span<double> out);

/// y[i] += alpha * x[i].
void axpy(double alpha, std::span<const double> x, std::span<double> y);

namespace detail {

// Raw-pointer kernel signatures shared by both backends.
struct KernelTable {
  void (*lognormal_pdf)(const double*, std::size_t, double, double, double, double*);
  void (*scaled_exp)(const double*, std::size_t, double, double, double*);
  void (*separation_row)(const double*, const double*, std::size_t, double, double, double*);
  void (*axpy)(double, const double*, std::size_t, double*);
};

const KernelTable& scalar_table();
/// nullptr when the AVX2 variant was not compiled in.
const KernelTable* avx2_table();

}  // namespace detail
}  // namespace gatekit::simd
