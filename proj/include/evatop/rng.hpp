// Deterministic 64-bit RNG (splitmix64).  Used instead of <random>
// distributions so that seeded runs are byte-identical across platforms.

#ifndef EVATOP_RNG_HPP
#define EVATOP_RNG_HPP

#include <cstdint>

namespace evatop {

inline constexpr uint64_t kDefaultSeed = 0xE5A51FE;

class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, n); n >= 1.
  uint64_t below(uint64_t n) { return next() % n; }

  // Uniform in [lo, hi] inclusive.
  uint64_t range(uint64_t lo, uint64_t hi) { return lo + below(hi - lo + 1); }

  bool coin() { return next() & 1; }

 private:
  uint64_t state_;
};

}  // namespace evatop

#endif
