#include "evatop/fpkernel.hpp"

#include <cstdlib>
#include <cstring>

namespace evatop::fpk {

namespace {

constexpr uint64_t kAvx2ModulusLimit = uint64_t{1} << 26;

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(__i386__)
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

Backend initial_backend() {
  // EVATOP_FPK=scalar|avx2 overrides the cpuid pick
  if (const char* env = std::getenv("EVATOP_FPK")) {
    if (std::strcmp(env, "scalar") == 0) return Backend::Scalar;
    if (std::strcmp(env, "avx2") == 0 && cpu_has_avx2()) return Backend::Avx2;
  }
  return cpu_has_avx2() ? Backend::Avx2 : Backend::Scalar;
}

Backend g_backend = initial_backend();

}  // namespace

void force_backend(Backend b) {
  if (b == Backend::Auto) {
    g_backend = cpu_has_avx2() ? Backend::Avx2 : Backend::Scalar;
    return;
  }
#if defined(__x86_64__) || defined(__i386__)
  if (b == Backend::Avx2 && !cpu_has_avx2()) b = Backend::Scalar;
#else
  b = Backend::Scalar;
#endif
  g_backend = b;
}

Backend active_backend() { return g_backend; }

const char* backend_name() {
  return g_backend == Backend::Avx2 ? "avx2" : "scalar";
}

void addmul_mod(uint64_t* y, const uint64_t* x, uint64_t c, uint64_t m,
                std::size_t n) {
#if defined(__x86_64__) || defined(__i386__)
  if (g_backend == Backend::Avx2 && m < kAvx2ModulusLimit) {
    addmul_mod_avx2(y, x, c, m, n);
    return;
  }
#endif
  addmul_mod_scalar(y, x, c, m, n);
}

void scale_mod(uint64_t* y, uint64_t c, uint64_t m, std::size_t n) {
#if defined(__x86_64__) || defined(__i386__)
  if (g_backend == Backend::Avx2 && m < kAvx2ModulusLimit) {
    scale_mod_avx2(y, c, m, n);
    return;
  }
#endif
  scale_mod_scalar(y, c, m, n);
}

}  // namespace evatop::fpk
