// Scalar reference kernels.  Reduction uses a Barrett-style multiply-high
// instead of a hardware divide; correctness for all m >= 2 is pinned by the
// equivalence tests against plain % arithmetic.

#include "evatop/fpkernel.hpp"

namespace evatop::fpk {

namespace {

struct BarrettU64 {
  uint64_t m;
  uint64_t mu;  // floor((2^64 - 1) / m)

  explicit BarrettU64(uint64_t mod) : m(mod), mu(~uint64_t{0} / mod) {}

  // Reduces t < 2^63 to t mod m; q undershoots t/m by at most 2.
  uint64_t reduce(__uint128_t t) const {
    uint64_t q = (uint64_t)((t * mu) >> 64);
    uint64_t r = (uint64_t)(t - (__uint128_t)q * m);
    while (r >= m) r -= m;
    return r;
  }
};

}  // namespace

void addmul_mod_scalar(uint64_t* y, const uint64_t* x, uint64_t c, uint64_t m,
                       std::size_t n) {
  if (c == 0) return;
  const BarrettU64 b(m);
  for (std::size_t i = 0; i < n; ++i) {
    y[i] = b.reduce((__uint128_t)c * x[i] + y[i]);
  }
}

void scale_mod_scalar(uint64_t* y, uint64_t c, uint64_t m, std::size_t n) {
  if (c == 1) return;
  if (c == 0) {
    for (std::size_t i = 0; i < n; ++i) y[i] = 0;
    return;
  }
  const BarrettU64 b(m);
  for (std::size_t i = 0; i < n; ++i) {
    y[i] = b.reduce((__uint128_t)c * y[i]);
  }
}

}  // namespace evatop::fpk
