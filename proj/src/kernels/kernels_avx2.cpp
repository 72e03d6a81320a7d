// Compiled with -mavx2; only called after a cpuid check.

#include <immintrin.h>

#include "scpr/kernels.hpp"

namespace scpr::kernels::avx2 {

namespace {

// No inline std templates in this TU: their COMDAT copies would be
// AVX-encoded and shared with the scalar path.
inline double dmax(double a, double b) { return a < b ? b : a; }
inline double dmin(double a, double b) { return b < a ? b : a; }
inline double dabs(double a) { return __builtin_fabs(a); }

inline double hmax(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_max_pd(lo, hi);
  __m128d sw = _mm_unpackhi_pd(lo, lo);
  return _mm_cvtsd_f64(_mm_max_sd(lo, sw));
}

inline double hmin(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_min_pd(lo, hi);
  __m128d sw = _mm_unpackhi_pd(lo, lo);
  return _mm_cvtsd_f64(_mm_min_sd(lo, sw));
}

}  // namespace

double max_abs_diff(const double* a, const double* b, std::size_t n) {
  const __m256d sign = _mm256_set1_pd(-0.0);
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d d = _mm256_sub_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i));
    acc = _mm256_max_pd(acc, _mm256_andnot_pd(sign, d));
  }
  double m = hmax(acc);
  for (; i < n; ++i) m = dmax(m, dabs(a[i] - b[i]));
  return m > 0.0 ? m : 0.0;
}

double monotone_violation(const double* prev, const double* cur,
                          std::size_t n) {
  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d zero = _mm256_setzero_pd();
  __m256d acc = zero;
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d p = _mm256_loadu_pd(prev + i);
    __m256d c = _mm256_loadu_pd(cur + i);
    acc = _mm256_max_pd(acc, _mm256_sub_pd(p, c));
    acc = _mm256_max_pd(acc, _mm256_sub_pd(zero, c));
    acc = _mm256_max_pd(acc, _mm256_sub_pd(c, one));
  }
  double m = hmax(acc);
  for (; i < n; ++i) {
    m = dmax(m, prev[i] - cur[i]);
    m = dmax(m, -cur[i]);
    m = dmax(m, cur[i] - 1.0);
  }
  return m > 0.0 ? m : 0.0;
}

double gather_max(const double* v, const std::uint32_t* idx, std::size_t n) {
  std::size_t k = 0;
  double m = v[idx[0]];
  if (n >= 4) {
    __m256d acc = _mm256_i32gather_pd(
        v, _mm_loadu_si128(reinterpret_cast<const __m128i*>(idx)), 8);
    for (k = 4; k + 4 <= n; k += 4)
      acc = _mm256_max_pd(
          acc, _mm256_i32gather_pd(
                   v, _mm_loadu_si128(reinterpret_cast<const __m128i*>(idx + k)),
                   8));
    m = hmax(acc);
  }
  for (; k < n; ++k) m = dmax(m, v[idx[k]]);
  return m;
}

double gather_min(const double* v, const std::uint32_t* idx, std::size_t n) {
  std::size_t k = 0;
  double m = v[idx[0]];
  if (n >= 4) {
    __m256d acc = _mm256_i32gather_pd(
        v, _mm_loadu_si128(reinterpret_cast<const __m128i*>(idx)), 8);
    for (k = 4; k + 4 <= n; k += 4)
      acc = _mm256_min_pd(
          acc, _mm256_i32gather_pd(
                   v, _mm_loadu_si128(reinterpret_cast<const __m128i*>(idx + k)),
                   8));
    m = hmin(acc);
  }
  for (; k < n; ++k) m = dmin(m, v[idx[k]]);
  return m;
}

}  // namespace scpr::kernels::avx2
