// Compiled with -mavx2 -mfma; only dispatched to after a CPUID check.

#include "poedh/kernels.hpp"

#if defined(POEDH_WITH_AVX2)

#include <immintrin.h>

namespace poedh::kern {

void mat4_mul_avx2(const double* a, const double* b, double* c) noexcept {
    const __m256d b0 = _mm256_loadu_pd(b + 0);
    const __m256d b1 = _mm256_loadu_pd(b + 4);
    const __m256d b2 = _mm256_loadu_pd(b + 8);
    const __m256d b3 = _mm256_loadu_pd(b + 12);
    for (int i = 0; i < 4; ++i) {
        __m256d acc = _mm256_mul_pd(_mm256_set1_pd(a[4 * i + 0]), b0);
        acc = _mm256_fmadd_pd(_mm256_set1_pd(a[4 * i + 1]), b1, acc);
        acc = _mm256_fmadd_pd(_mm256_set1_pd(a[4 * i + 2]), b2, acc);
        acc = _mm256_fmadd_pd(_mm256_set1_pd(a[4 * i + 3]), b3, acc);
        _mm256_storeu_pd(c + 4 * i, acc);
    }
}

}  // namespace poedh::kern

#endif  // POEDH_WITH_AVX2
