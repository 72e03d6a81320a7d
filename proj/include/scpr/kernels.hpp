#pragma once

// Data-parallel inner loops of value iteration.
//
// Every kernel has a scalar reference implementation and vectorised variants
// (AVX2 on x86-64, NEON on aarch64). The variant is picked once at startup
// from the CPU's feature bits and can be overridden for testing. All kernels
// are max/min reductions over exact values, so every variant returns
// bit-identical results to the scalar reference.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace scpr::kernels {

enum class Isa { Scalar, Avx2, Neon };

const char* to_string(Isa isa);

// max_i |a[i] - b[i]|; 0 for empty input. Sizes must match.
double max_abs_diff(std::span<const double> a, std::span<const double> b);

// max_i max(prev[i] - cur[i], -cur[i], cur[i] - 1), clipped below at 0.
// Zero iff 0 <= prev <= cur <= 1 holds componentwise (given prev >= 0).
double monotone_violation(std::span<const double> prev,
                          std::span<const double> cur);

// max / min of values[idx[k]] over k. `idx` must be non-empty.
double gather_max(const double* values, std::span<const std::uint32_t> idx);
double gather_min(const double* values, std::span<const std::uint32_t> idx);

// Variants compiled into this binary and supported by the running CPU.
std::vector<Isa> available_isas();

Isa active_isa();

// Forces a variant (must be in available_isas()); returns the previous one.
Isa set_active_isa(Isa isa);

namespace scalar {
double max_abs_diff(const double* a, const double* b, std::size_t n);
double monotone_violation(const double* prev, const double* cur, std::size_t n);
double gather_max(const double* v, const std::uint32_t* idx, std::size_t n);
double gather_min(const double* v, const std::uint32_t* idx, std::size_t n);
}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
namespace avx2 {
double max_abs_diff(const double* a, const double* b, std::size_t n);
double monotone_violation(const double* prev, const double* cur, std::size_t n);
double gather_max(const double* v, const std::uint32_t* idx, std::size_t n);
double gather_min(const double* v, const std::uint32_t* idx, std::size_t n);
}  // namespace avx2
#endif

#if defined(__aarch64__)
namespace neon {
double max_abs_diff(const double* a, const double* b, std::size_t n);
double monotone_violation(const double* prev, const double* cur, std::size_t n);
double gather_max(const double* v, const std::uint32_t* idx, std::size_t n);
double gather_min(const double* v, const std::uint32_t* idx, std::size_t n);
}  // namespace neon
#endif

}  // namespace scpr::kernels
