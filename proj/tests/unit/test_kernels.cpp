#include <algorithm>
#include <cstring>
#include <limits>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "scpr/kernels.hpp"

using namespace scpr;

namespace {

bool same_bits(double a, double b) { return std::memcmp(&a, &b, sizeof a) == 0; }

struct IsaGuard {
  kernels::Isa saved = kernels::active_isa();
  ~IsaGuard() { kernels::set_active_isa(saved); }
};

}  // namespace

TEST_SUITE("kernels") {

TEST_CASE("scalar reference values") {
  const double a[] = {0.0, 0.5, 1.0}, b[] = {0.25, 0.5, 0.5};
  CHECK(kernels::scalar::max_abs_diff(a, b, 3) == 0.5);
  CHECK(kernels::scalar::max_abs_diff(a, b, 0) == 0.0);
  CHECK(kernels::scalar::monotone_violation(b, a, 3) == 0.25);
  CHECK(kernels::scalar::monotone_violation(a, a, 3) == 0.0);
  const double over[] = {0.0, 0.5, 1.5};
  CHECK(kernels::scalar::monotone_violation(a, over, 3) == 0.5);
  const double v[] = {0.1, 0.7, 0.3, 0.9};
  const std::uint32_t idx[] = {2, 0, 1};
  CHECK(kernels::scalar::gather_max(v, idx, 3) == 0.7);
  CHECK(kernels::scalar::gather_min(v, idx, 3) == 0.1);
}

TEST_CASE("the scalar variant is always available and selectable") {
  IsaGuard guard;
  auto isas = kernels::available_isas();
  CHECK(std::find(isas.begin(), isas.end(), kernels::Isa::Scalar) != isas.end());
  kernels::set_active_isa(kernels::Isa::Scalar);
  CHECK(kernels::active_isa() == kernels::Isa::Scalar);
}

TEST_CASE("every variant is bit-identical to the scalar reference") {
  IsaGuard guard;
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (kernels::Isa isa : kernels::available_isas()) {
    CAPTURE(kernels::to_string(isa));
    kernels::set_active_isa(isa);
    for (std::size_t n = 0; n < 70; ++n) {
      std::vector<double> a(n), b(n), v(n + 5);
      for (auto& x : a) x = unit(rng);
      for (auto& x : b) x = unit(rng) < 0.3 ? unit(rng) : 0.0;
      for (std::size_t i = 0; i < n; ++i)
        if (unit(rng) < 0.2) b[i] = a[i];
        else if (unit(rng) < 0.1) b[i] = a[i] + 0.5;
      for (auto& x : v) x = unit(rng);
      std::vector<std::uint32_t> idx(n + 1);
      for (auto& k : idx) k = static_cast<std::uint32_t>(rng() % v.size());

      CHECK(same_bits(kernels::max_abs_diff(a, b),
                      kernels::scalar::max_abs_diff(a.data(), b.data(), n)));
      CHECK(same_bits(kernels::monotone_violation(a, b),
                      kernels::scalar::monotone_violation(a.data(), b.data(), n)));
      CHECK(same_bits(kernels::gather_max(v.data(), idx),
                      kernels::scalar::gather_max(v.data(), idx.data(), idx.size())));
      CHECK(same_bits(kernels::gather_min(v.data(), idx),
                      kernels::scalar::gather_min(v.data(), idx.data(), idx.size())));
    }
  }
}

TEST_CASE("signed zeros and repeated indices") {
  IsaGuard guard;
  const double v[] = {-0.0, 0.0, 0.0, -0.0, 0.5};
  const std::vector<std::uint32_t> idx = {0, 1, 2, 3, 0, 0, 1};
  for (kernels::Isa isa : kernels::available_isas()) {
    kernels::set_active_isa(isa);
    CHECK(same_bits(kernels::gather_max(v, idx),
                    kernels::scalar::gather_max(v, idx.data(), idx.size())));
    CHECK(same_bits(kernels::gather_min(v, idx),
                    kernels::scalar::gather_min(v, idx.data(), idx.size())));
  }
}

}
