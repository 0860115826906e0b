// AVX2 kernels.  Four u64 lanes per step; c and all values are < m < 2^26, so
// c*x + y < 2^52 + 2^26 and every intermediate is exactly representable as a
// double.  Reduction: convert to double with the 2^52 magic-number trick,
// multiply by 1/m, floor, subtract q*m, then one conditional fix-up in each
// direction.

#include "evatop/fpkernel.hpp"

#if defined(__x86_64__) || defined(__i386__)

#include <immintrin.h>

namespace evatop::fpk {

namespace {

constexpr uint64_t kMagic = 0x4330000000000000ull;  // double 2^52

__attribute__((target("avx2"))) inline __m256d u64_to_pd(__m256i v) {
  const __m256i magic = _mm256_set1_epi64x((long long)kMagic);
  return _mm256_sub_pd(_mm256_castsi256_pd(_mm256_or_si256(v, magic)),
                       _mm256_castsi256_pd(magic));
}

__attribute__((target("avx2"))) inline __m256i pd_to_u64(__m256d v) {
  const __m256i magic = _mm256_set1_epi64x((long long)kMagic);
  return _mm256_sub_epi64(
      _mm256_castpd_si256(_mm256_add_pd(v, _mm256_castsi256_pd(magic))),
      magic);
}

// t mod m for t < 2^52, lanewise.
__attribute__((target("avx2"))) inline __m256i mod_pd(__m256i t, __m256d md,
                                                      __m256d inv_md) {
  __m256d td = u64_to_pd(t);
  __m256d q = _mm256_floor_pd(_mm256_mul_pd(td, inv_md));
  __m256d r = _mm256_sub_pd(td, _mm256_mul_pd(q, md));
  // q may be off by one in either direction
  __m256d zero = _mm256_setzero_pd();
  __m256d neg = _mm256_cmp_pd(r, zero, _CMP_LT_OQ);
  r = _mm256_add_pd(r, _mm256_and_pd(neg, md));
  __m256d ge = _mm256_cmp_pd(r, md, _CMP_GE_OQ);
  r = _mm256_sub_pd(r, _mm256_and_pd(ge, md));
  return pd_to_u64(r);
}

}  // namespace

__attribute__((target("avx2"))) void addmul_mod_avx2(uint64_t* y,
                                                     const uint64_t* x,
                                                     uint64_t c, uint64_t m,
                                                     std::size_t n) {
  if (c == 0) return;
  const __m256i vc = _mm256_set1_epi64x((long long)c);
  const __m256d md = _mm256_set1_pd((double)m);
  const __m256d inv_md = _mm256_set1_pd(1.0 / (double)m);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256i vx = _mm256_loadu_si256((const __m256i*)(x + i));
    __m256i vy = _mm256_loadu_si256((const __m256i*)(y + i));
    // x, c < 2^26: full product lives in the low 32x32 bits
    __m256i prod = _mm256_mul_epu32(vx, vc);
    __m256i t = _mm256_add_epi64(vy, prod);
    _mm256_storeu_si256((__m256i*)(y + i), mod_pd(t, md, inv_md));
  }
  if (i < n) addmul_mod_scalar(y + i, x + i, c, m, n - i);
}

__attribute__((target("avx2"))) void scale_mod_avx2(uint64_t* y, uint64_t c,
                                                    uint64_t m,
                                                    std::size_t n) {
  if (c == 1) return;
  const __m256i vc = _mm256_set1_epi64x((long long)c);
  const __m256d md = _mm256_set1_pd((double)m);
  const __m256d inv_md = _mm256_set1_pd(1.0 / (double)m);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256i vy = _mm256_loadu_si256((const __m256i*)(y + i));
    __m256i prod = _mm256_mul_epu32(vy, vc);
    _mm256_storeu_si256((__m256i*)(y + i), mod_pd(prod, md, inv_md));
  }
  if (i < n) scale_mod_scalar(y + i, c, m, n - i);
}

}  // namespace evatop::fpk

#endif
