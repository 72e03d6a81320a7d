// aarch64 only; NEON is part of the base ISA there.

#include <arm_neon.h>

#include <algorithm>
#include <cmath>

#include "scpr/kernels.hpp"

namespace scpr::kernels::neon {

double max_abs_diff(const double* a, const double* b, std::size_t n) {
  float64x2_t acc = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2)
    acc = vmaxq_f64(acc, vabdq_f64(vld1q_f64(a + i), vld1q_f64(b + i)));
  double m = vmaxvq_f64(acc);
  for (; i < n; ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m > 0.0 ? m : 0.0;
}

double monotone_violation(const double* prev, const double* cur,
                          std::size_t n) {
  const float64x2_t one = vdupq_n_f64(1.0);
  float64x2_t acc = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    float64x2_t p = vld1q_f64(prev + i);
    float64x2_t c = vld1q_f64(cur + i);
    acc = vmaxq_f64(acc, vsubq_f64(p, c));
    acc = vmaxq_f64(acc, vnegq_f64(c));
    acc = vmaxq_f64(acc, vsubq_f64(c, one));
  }
  double m = vmaxvq_f64(acc);
  for (; i < n; ++i) {
    m = std::max(m, prev[i] - cur[i]);
    m = std::max(m, -cur[i]);
    m = std::max(m, cur[i] - 1.0);
  }
  return m > 0.0 ? m : 0.0;
}

// No hardware gather: pairs are loaded lane by lane.
double gather_max(const double* v, const std::uint32_t* idx, std::size_t n) {
  double m = v[idx[0]];
  std::size_t k = 0;
  if (n >= 2) {
    float64x2_t acc = {v[idx[0]], v[idx[1]]};
    for (k = 2; k + 2 <= n; k += 2)
      acc = vmaxq_f64(acc, float64x2_t{v[idx[k]], v[idx[k + 1]]});
    m = vmaxvq_f64(acc);
  }
  for (; k < n; ++k) m = std::max(m, v[idx[k]]);
  return m;
}

double gather_min(const double* v, const std::uint32_t* idx, std::size_t n) {
  double m = v[idx[0]];
  std::size_t k = 0;
  if (n >= 2) {
    float64x2_t acc = {v[idx[0]], v[idx[1]]};
    for (k = 2; k + 2 <= n; k += 2)
      acc = vminq_f64(acc, float64x2_t{v[idx[k]], v[idx[k + 1]]});
    m = vminvq_f64(acc);
  }
  for (; k < n; ++k) m = std::min(m, v[idx[k]]);
  return m;
}

}  // namespace scpr::kernels::neon
