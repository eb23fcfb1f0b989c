#pragma once

// Composition kernels. The 4x4 product is the inner arithmetic of every FK
// chain and conversion step, so it is provided as a scalar reference kernel
// plus SIMD variants selected at runtime. All variants take row-major
// double[16] operands; the output pointer must not alias the inputs.

namespace poedh::kern {

using Mat4MulFn = void (*)(const double* a, const double* b, double* c) noexcept;

// Reference kernel; also the fallback on targets without a SIMD variant.
void mat4_mul_scalar(const double* a, const double* b, double* c) noexcept;

#if defined(POEDH_WITH_AVX2)
// AVX2/FMA variant, one 256-bit row accumulator per output row.
void mat4_mul_avx2(const double* a, const double* b, double* c) noexcept;
#endif

#if defined(POEDH_WITH_NEON)
// NEON variant, two 128-bit accumulators per output row.
void mat4_mul_neon(const double* a, const double* b, double* c) noexcept;
#endif

enum class Kernel { Auto, Scalar, Avx2, Neon };

// True when the running CPU can execute the AVX2/FMA variant.
bool cpu_has_avx2() noexcept;

// Switches the dispatched kernel. Returns false (and leaves the selection
// unchanged) when the requested variant is not compiled in or the CPU lacks
// it. Kernel::Auto re-runs the startup resolution, which also honours the
// POEDH_KERNEL environment variable ("scalar", "avx2", "neon").
bool select_mat4_kernel(Kernel k) noexcept;

// Name of the kernel currently dispatched to: "scalar", "avx2", or "neon".
const char* active_mat4_kernel_name() noexcept;

// Dispatched product c = a * b.
void mat4_mul(const double* a, const double* b, double* c) noexcept;

}  // namespace poedh::kern
