// Vector kernels for arithmetic modulo a small integer m.
//
// These are the inner loops of every row operation in FpMatrix.  Each kernel
// has a scalar reference implementation and (on x86-64) an AVX2 variant; the
// active variant is selected once at startup from CPUID and can be overridden
// for testing.  All kernels require every input value to lie in [0, m).

#ifndef EVATOP_FPKERNEL_HPP
#define EVATOP_FPKERNEL_HPP

#include <cstddef>
#include <cstdint>

namespace evatop::fpk {

// y[i] <- (y[i] + c * x[i]) mod m
void addmul_mod_scalar(uint64_t* y, const uint64_t* x, uint64_t c, uint64_t m,
                       std::size_t n);
// y[i] <- (c * y[i]) mod m
void scale_mod_scalar(uint64_t* y, uint64_t c, uint64_t m, std::size_t n);

#if defined(__x86_64__) || defined(__i386__)
// AVX2 variants.  Valid only for m < 2^26 (the reduction step goes through
// doubles, which hold products up to 2^52 exactly).  Callers go through the
// dispatching wrappers below, which enforce the modulus bound.
void addmul_mod_avx2(uint64_t* y, const uint64_t* x, uint64_t c, uint64_t m,
                     std::size_t n);
void scale_mod_avx2(uint64_t* y, uint64_t c, uint64_t m, std::size_t n);
#endif

enum class Backend { Auto, Scalar, Avx2 };

// Active-backend control.  force_backend(Backend::Auto) re-probes the CPU.
void force_backend(Backend b);
Backend active_backend();
const char* backend_name();

// Dispatching entry points used by FpMatrix.  These fall back to the scalar
// kernels when the modulus is out of range for the vector path.
void addmul_mod(uint64_t* y, const uint64_t* x, uint64_t c, uint64_t m,
                std::size_t n);
void scale_mod(uint64_t* y, uint64_t c, uint64_t m, std::size_t n);

}  // namespace evatop::fpk

#endif
