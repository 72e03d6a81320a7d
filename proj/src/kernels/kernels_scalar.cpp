#include <algorithm>
#include <cmath>

#include "scpr/kernels.hpp"

namespace scpr::kernels::scalar {

double max_abs_diff(const double* a, const double* b, std::size_t n) {
  double m = 0.0;
  for (std::size_t i = 0; i < n; ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

double monotone_violation(const double* prev, const double* cur,
                          std::size_t n) {
  double m = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    m = std::max(m, prev[i] - cur[i]);
    m = std::max(m, -cur[i]);
    m = std::max(m, cur[i] - 1.0);
  }
  return m;
}

double gather_max(const double* v, const std::uint32_t* idx, std::size_t n) {
  double m = v[idx[0]];
  for (std::size_t k = 1; k < n; ++k) m = std::max(m, v[idx[k]]);
  return m;
}

double gather_min(const double* v, const std::uint32_t* idx, std::size_t n) {
  double m = v[idx[0]];
  for (std::size_t k = 1; k < n; ++k) m = std::min(m, v[idx[k]]);
  return m;
}

}  // namespace scpr::kernels::scalar
