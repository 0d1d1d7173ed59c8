// AVX2/FMA variants of the kernels in kernels_scalar.cpp.
//
// Functions carry target attributes instead of the whole TU being built with
// -mavx2, so no inline library code in this file is ever emitted with AVX2
// instructions and picked up by the scalar path at link time.

#include "gatekit/simd/kernels.hpp"

#if defined(__x86_64__) && (defined(__GNUC__) || defined(__clang__))
#define GATEKIT_HAVE_AVX2 1
#include <immintrin.h>
#endif

namespace gatekit::simd::detail {

#if GATEKIT_HAVE_AVX2
namespace {

#define GK_AVX2 __attribute__((target("avx2,fma")))

constexpr double kLn2Hi = 6.93145751953125E-1;
constexpr double kLn2Lo = 1.42860682030941723212E-6;
constexpr double kLog2e = 1.4426950408889634073599;

GK_AVX2 inline __m256i tail_mask(std::size_t remaining) {
  const __m256i lanes = _mm256_set_epi64x(3, 2, 1, 0);
  return _mm256_cmpgt_epi64(_mm256_set1_epi64x(static_cast<long long>(remaining)), lanes);
}

// exp(x) for |x| <= 709; returns 0 below -708.
GK_AVX2 inline __m256d exp_pd(__m256d x) {
  const __m256d lo = _mm256_set1_pd(-708.0);
  const __m256d hi = _mm256_set1_pd(709.0);
  const __m256d underflow = _mm256_cmp_pd(x, lo, _CMP_LT_OQ);
  x = _mm256_min_pd(_mm256_max_pd(x, lo), hi);

  const __m256d n = _mm256_round_pd(_mm256_mul_pd(x, _mm256_set1_pd(kLog2e)),
                                    _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
  __m256d r = _mm256_fnmadd_pd(n, _mm256_set1_pd(kLn2Hi), x);
  r = _mm256_fnmadd_pd(n, _mm256_set1_pd(kLn2Lo), r);

  // Taylor series through r^13; |r| <= ln2/2 keeps truncation below 1e-17.
  static constexpr double c[] = {
      1.0 / 6227020800.0, 1.0 / 479001600.0, 1.0 / 39916800.0, 1.0 / 3628800.0,
      1.0 / 362880.0,     1.0 / 40320.0,     1.0 / 5040.0,     1.0 / 720.0,
      1.0 / 120.0,        1.0 / 24.0,        1.0 / 6.0,        0.5,
      1.0,                1.0};
  __m256d p = _mm256_set1_pd(c[0]);
  for (int k = 1; k < 14; ++k) p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(c[k]));

  __m256i e = _mm256_cvtepi32_epi64(_mm256_cvtpd_epi32(n));
  e = _mm256_slli_epi64(_mm256_add_epi64(e, _mm256_set1_epi64x(1023)), 52);
  const __m256d result = _mm256_mul_pd(p, _mm256_castsi256_pd(e));
  return _mm256_blendv_pd(result, _mm256_setzero_pd(), underflow);
}

// Natural log for positive normal doubles.
GK_AVX2 inline __m256d log_pd(__m256d u) {
  const __m256i bits = _mm256_castpd_si256(u);
  const __m256i magic = _mm256_set1_epi64x(0x4330000000000000LL);
  const __m256d biased = _mm256_sub_pd(
      _mm256_castsi256_pd(_mm256_or_si256(_mm256_srli_epi64(bits, 52), magic)),
      _mm256_set1_pd(0x1p52));
  __m256d e = _mm256_sub_pd(biased, _mm256_set1_pd(1023.0));

  const __m256i mant = _mm256_or_si256(
      _mm256_and_si256(bits, _mm256_set1_epi64x(0x000FFFFFFFFFFFFFLL)),
      _mm256_set1_epi64x(0x3FF0000000000000LL));
  __m256d m = _mm256_castsi256_pd(mant);
  const __m256d big = _mm256_cmp_pd(m, _mm256_set1_pd(1.4142135623730951), _CMP_GT_OQ);
  m = _mm256_blendv_pd(m, _mm256_mul_pd(m, _mm256_set1_pd(0.5)), big);
  e = _mm256_add_pd(e, _mm256_and_pd(big, _mm256_set1_pd(1.0)));

  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d s = _mm256_div_pd(_mm256_sub_pd(m, one), _mm256_add_pd(m, one));
  const __m256d s2 = _mm256_mul_pd(s, s);
  // 2 atanh(s) = 2 s sum_k s^(2k) / (2k+1), k <= 10.
  __m256d p = _mm256_set1_pd(1.0 / 21.0);
  for (int k = 9; k >= 0; --k)
    p = _mm256_fmadd_pd(p, s2, _mm256_set1_pd(1.0 / (2.0 * k + 1.0)));
  const __m256d logm = _mm256_mul_pd(_mm256_add_pd(s, s), p);

  return _mm256_fmadd_pd(e, _mm256_set1_pd(kLn2Hi),
                         _mm256_fmadd_pd(e, _mm256_set1_pd(kLn2Lo), logm));
}

GK_AVX2 inline __m256d lognormal_pdf_pd(__m256d x, __m256d mu, __m256d shift,
                                        __m256d inv_two_var, __m256d inv_norm) {
  const __m256d u = _mm256_sub_pd(x, shift);
  const __m256d valid = _mm256_cmp_pd(u, _mm256_set1_pd(0x1p-1022), _CMP_GE_OQ);
  const __m256d safe_u = _mm256_blendv_pd(_mm256_set1_pd(1.0), u, valid);
  const __m256d t = log_pd(safe_u);
  const __m256d d = _mm256_sub_pd(t, mu);
  const __m256d arg = _mm256_fnmadd_pd(_mm256_mul_pd(d, d), inv_two_var,
                                       _mm256_sub_pd(_mm256_setzero_pd(), t));
  const __m256d pdf = _mm256_mul_pd(inv_norm, exp_pd(arg));
  return _mm256_and_pd(pdf, valid);
}

GK_AVX2 void lognormal_pdf_avx2(const double* x, std::size_t n, double mu,
                                double sigma, double shift, double* out) {
  const __m256d vmu = _mm256_set1_pd(mu);
  const __m256d vshift = _mm256_set1_pd(shift);
  const __m256d inv_two_var = _mm256_set1_pd(1.0 / (2.0 * sigma * sigma));
  const __m256d inv_norm = _mm256_set1_pd(1.0 / (sigma * 2.5066282746310002));
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(out + i, lognormal_pdf_pd(_mm256_loadu_pd(x + i), vmu, vshift,
                                               inv_two_var, inv_norm));
  }
  if (i < n) {
    const __m256i mask = tail_mask(n - i);
    const __m256d v = _mm256_maskload_pd(x + i, mask);
    _mm256_maskstore_pd(out + i, mask,
                        lognormal_pdf_pd(v, vmu, vshift, inv_two_var, inv_norm));
  }
}

GK_AVX2 void scaled_exp_avx2(const double* t, std::size_t n, double scale,
                             double rate, double* out) {
  const __m256d vscale = _mm256_set1_pd(scale);
  const __m256d vrate = _mm256_set1_pd(rate);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d v = exp_pd(_mm256_mul_pd(vrate, _mm256_loadu_pd(t + i)));
    _mm256_storeu_pd(out + i, _mm256_mul_pd(vscale, v));
  }
  if (i < n) {
    const __m256i mask = tail_mask(n - i);
    const __m256d v = exp_pd(_mm256_mul_pd(vrate, _mm256_maskload_pd(t + i, mask)));
    _mm256_maskstore_pd(out + i, mask, _mm256_mul_pd(vscale, v));
  }
}

GK_AVX2 inline __m256d separation_pd(__m256d arr, __m256d dep, __m256d arr_i,
                                     __m256d dep_i) {
  const __m256d earlier = _mm256_cmp_pd(dep_i, dep, _CMP_LT_OQ);
  const __m256d tied = _mm256_and_pd(_mm256_cmp_pd(dep_i, dep, _CMP_EQ_OQ),
                                     _mm256_cmp_pd(arr_i, arr, _CMP_LE_OQ));
  const __m256d i_first = _mm256_or_pd(earlier, tied);
  return _mm256_blendv_pd(_mm256_sub_pd(arr_i, dep), _mm256_sub_pd(arr, dep_i), i_first);
}

GK_AVX2 void separation_row_avx2(const double* arr, const double* dep,
                                 std::size_t n, double arr_i, double dep_i,
                                 double* out) {
  const __m256d va = _mm256_set1_pd(arr_i);
  const __m256d vd = _mm256_set1_pd(dep_i);
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    _mm256_storeu_pd(out + k, separation_pd(_mm256_loadu_pd(arr + k),
                                            _mm256_loadu_pd(dep + k), va, vd));
  }
  if (k < n) {
    const __m256i mask = tail_mask(n - k);
    _mm256_maskstore_pd(out + k, mask,
                        separation_pd(_mm256_maskload_pd(arr + k, mask),
                                      _mm256_maskload_pd(dep + k, mask), va, vd));
  }
}

GK_AVX2 void axpy_avx2(double alpha, const double* x, std::size_t n, double* y) {
  const __m256d va = _mm256_set1_pd(alpha);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(y + i, _mm256_fmadd_pd(va, _mm256_loadu_pd(x + i),
                                            _mm256_loadu_pd(y + i)));
  }
  if (i < n) {
    const __m256i mask = tail_mask(n - i);
    const __m256d r = _mm256_fmadd_pd(va, _mm256_maskload_pd(x + i, mask),
                                      _mm256_maskload_pd(y + i, mask));
    _mm256_maskstore_pd(y + i, mask, r);
  }
}

#undef GK_AVX2

}  // namespace

const KernelTable* avx2_table() {
  static const KernelTable table{lognormal_pdf_avx2, scaled_exp_avx2,
                                 separation_row_avx2, axpy_avx2};
  return &table;
}

#else

const KernelTable* avx2_table() { return nullptr; }

#endif

}  // namespace gatekit::simd::detail
