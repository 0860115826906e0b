#include <string>
#include <vector>

#include "doctest.h"
#include "evatop/fpkernel.hpp"
#include "evatop/rng.hpp"

using namespace evatop;

namespace {

std::vector<uint64_t> random_vec(Rng& rng, std::size_t n, uint64_t m) {
  std::vector<uint64_t> v(n);
  for (auto& x : v) x = rng.below(m);
  return v;
}

}  // namespace

TEST_CASE("scalar kernels agree with plain modular arithmetic") {
  Rng rng(7);
  for (uint64_t m : {2ull, 3ull, 5ull, 7ull, 97ull, 104729ull,
                     (1ull << 26) - 5, (1ull << 31) - 1}) {
    for (std::size_t n : {0u, 1u, 3u, 17u, 64u}) {
      std::vector<uint64_t> y = random_vec(rng, n, m);
      std::vector<uint64_t> x = random_vec(rng, n, m);
      uint64_t c = rng.below(m);
      std::vector<uint64_t> want = y;
      for (std::size_t i = 0; i < n; ++i)
        want[i] = (uint64_t)(((__uint128_t)c * x[i] + y[i]) % m);
      std::vector<uint64_t> got = y;
      fpk::addmul_mod_scalar(got.data(), x.data(), c, m, n);
      CHECK(got == want);

      std::vector<uint64_t> want2 = y;
      for (std::size_t i = 0; i < n; ++i)
        want2[i] = (uint64_t)((__uint128_t)c * y[i] % m);
      std::vector<uint64_t> got2 = y;
      fpk::scale_mod_scalar(got2.data(), c, m, n);
      CHECK(got2 == want2);
    }
  }
}

#if defined(__x86_64__) || defined(__i386__)
TEST_CASE("avx2 kernels match the scalar reference") {
  if (!__builtin_cpu_supports("avx2")) return;
  Rng rng(11);
  for (uint64_t m : {2ull, 3ull, 5ull, 97ull, 65521ull, (1ull << 26) - 5}) {
    for (std::size_t n : {1u, 4u, 5u, 8u, 31u, 256u}) {
      std::vector<uint64_t> y = random_vec(rng, n, m);
      std::vector<uint64_t> x = random_vec(rng, n, m);
      uint64_t c = rng.below(m);
      std::vector<uint64_t> a = y, b = y;
      fpk::addmul_mod_scalar(a.data(), x.data(), c, m, n);
      fpk::addmul_mod_avx2(b.data(), x.data(), c, m, n);
      CHECK(a == b);
      std::vector<uint64_t> s1 = y, s2 = y;
      fpk::scale_mod_scalar(s1.data(), c, m, n);
      fpk::scale_mod_avx2(s2.data(), c, m, n);
      CHECK(s1 == s2);
    }
  }
}
#endif

TEST_CASE("dispatch honors forced backends and modulus limits") {
  fpk::force_backend(fpk::Backend::Scalar);
  CHECK(std::string(fpk::backend_name()) == "scalar");
  std::vector<uint64_t> y{1, 2, 3, 4, 5};
  std::vector<uint64_t> x{4, 3, 2, 1, 0};
  fpk::addmul_mod(y.data(), x.data(), 3, 5, y.size());
  CHECK(y == std::vector<uint64_t>{3, 1, 4, 2, 0});
  fpk::force_backend(fpk::Backend::Auto);
  // huge modulus must route to the scalar path regardless of backend
  std::vector<uint64_t> big{(1ull << 30) + 7};
  std::vector<uint64_t> xb{(1ull << 30) + 1};
  fpk::addmul_mod(big.data(), xb.data(), (1ull << 29), (1ull << 31) - 1, 1);
  uint64_t want = (uint64_t)((((__uint128_t)1 << 29) * ((1ull << 30) + 1) +
                              ((1ull << 30) + 7)) %
                             ((1ull << 31) - 1));
  CHECK(big[0] == want);
}
