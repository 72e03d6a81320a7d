#include <atomic>
#include <stdexcept>
#include <string>

#include "scpr/kernels.hpp"

namespace scpr::kernels {

namespace {

struct Table {
  double (*max_abs_diff)(const double*, const double*, std::size_t);
  double (*monotone_violation)(const double*, const double*, std::size_t);
  double (*gather_max)(const double*, const std::uint32_t*, std::size_t);
  double (*gather_min)(const double*, const std::uint32_t*, std::size_t);
};

constexpr Table kScalar{scalar::max_abs_diff, scalar::monotone_violation,
                        scalar::gather_max, scalar::gather_min};
#if defined(__x86_64__) || defined(_M_X64)
constexpr Table kAvx2{avx2::max_abs_diff, avx2::monotone_violation,
                      avx2::gather_max, avx2::gather_min};
#endif
#if defined(__aarch64__)
constexpr Table kNeon{neon::max_abs_diff, neon::monotone_violation,
                      neon::gather_max, neon::gather_min};
#endif

const Table& table_for(Isa isa) {
  switch (isa) {
#if defined(__x86_64__) || defined(_M_X64)
    case Isa::Avx2: return kAvx2;
#endif
#if defined(__aarch64__)
    case Isa::Neon: return kNeon;
#endif
    default: return kScalar;
  }
}

Isa detect() {
#if defined(__x86_64__) || defined(_M_X64)
  __builtin_cpu_init();
  if (__builtin_cpu_supports("avx2")) return Isa::Avx2;
#endif
#if defined(__aarch64__)
  return Isa::Neon;
#endif
  return Isa::Scalar;
}

std::atomic<Isa>& current() {
  static std::atomic<Isa> isa{detect()};
  return isa;
}

const Table& active() { return table_for(current().load(std::memory_order_relaxed)); }

}  // namespace

const char* to_string(Isa isa) {
  switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
    case Isa::Neon: return "neon";
  }
  return "?";
}

std::vector<Isa> available_isas() {
  std::vector<Isa> out{Isa::Scalar};
  Isa best = detect();
  if (best != Isa::Scalar) out.push_back(best);
  return out;
}

Isa active_isa() { return current().load(); }

Isa set_active_isa(Isa isa) {
  for (Isa a : available_isas())
    if (a == isa) return current().exchange(isa);
  throw std::invalid_argument(std::string("kernel variant '") + to_string(isa) +
                              "' is not available on this machine");
}

double max_abs_diff(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size())
    throw std::invalid_argument("max_abs_diff: size mismatch");
  return active().max_abs_diff(a.data(), b.data(), a.size());
}

double monotone_violation(std::span<const double> prev,
                          std::span<const double> cur) {
  if (prev.size() != cur.size())
    throw std::invalid_argument("monotone_violation: size mismatch");
  return active().monotone_violation(prev.data(), cur.data(), prev.size());
}

double gather_max(const double* values, std::span<const std::uint32_t> idx) {
  return active().gather_max(values, idx.data(), idx.size());
}

double gather_min(const double* values, std::span<const std::uint32_t> idx) {
  return active().gather_min(values, idx.data(), idx.size());
}

}  // namespace scpr::kernels
