// Microbenchmark for the mod-p row kernels: times the scalar reference and
// the runtime-selected backend on the same data.

#include <chrono>
#include <cstdio>
#include <vector>

#include "evatop/fpkernel.hpp"
#include "evatop/rng.hpp"

using namespace evatop;

namespace {

double time_addmul(void (*fn)(uint64_t*, const uint64_t*, uint64_t, uint64_t,
                              std::size_t),
                   std::vector<uint64_t>& y, const std::vector<uint64_t>& x,
                   uint64_t c, uint64_t m, int reps) {
  auto start = std::chrono::steady_clock::now();
  for (int r = 0; r < reps; ++r) fn(y.data(), x.data(), c, m, y.size());
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

}  // namespace

int main() {
  std::printf("active backend: %s\n", fpk::backend_name());
  for (uint64_t m : {5ull, 65521ull, (1ull << 26) - 5}) {
    for (std::size_t n : {64u, 1024u, 65536u}) {
      Rng rng(1);
      std::vector<uint64_t> y(n), x(n);
      for (auto& v : y) v = rng.below(m);
      for (auto& v : x) v = rng.below(m);
      uint64_t c = 1 + rng.below(m - 1);
      int reps = (int)(1 << 24) / (int)n;

      std::vector<uint64_t> ys = y;
      double ts = time_addmul(fpk::addmul_mod_scalar, ys, x, c, m, reps);
      std::vector<uint64_t> yd = y;
      double td = time_addmul(fpk::addmul_mod, yd, x, c, m, reps);
      if (ys != yd) {
        std::printf("MISMATCH at m=%llu n=%zu\n", (unsigned long long)m, n);
        return 1;
      }
      double mels = (double)n * reps / 1e6;
      std::printf("m=%-9llu n=%-6zu scalar %7.1f Melt/s   selected %7.1f Melt/s\n",
                  (unsigned long long)m, n, mels / ts, mels / td);
    }
  }
  return 0;
}
