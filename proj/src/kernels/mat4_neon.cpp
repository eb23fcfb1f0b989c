// AArch64 build only; NEON is baseline there so no extra flags are needed.

#include "poedh/kernels.hpp"

#if defined(POEDH_WITH_NEON)

#include <arm_neon.h>

namespace poedh::kern {

void mat4_mul_neon(const double* a, const double* b, double* c) noexcept {
    const float64x2_t b0l = vld1q_f64(b + 0), b0h = vld1q_f64(b + 2);
    const float64x2_t b1l = vld1q_f64(b + 4), b1h = vld1q_f64(b + 6);
    const float64x2_t b2l = vld1q_f64(b + 8), b2h = vld1q_f64(b + 10);
    const float64x2_t b3l = vld1q_f64(b + 12), b3h = vld1q_f64(b + 14);
    for (int i = 0; i < 4; ++i) {
        float64x2_t lo = vmulq_n_f64(b0l, a[4 * i + 0]);
        float64x2_t hi = vmulq_n_f64(b0h, a[4 * i + 0]);
        lo = vfmaq_n_f64(lo, b1l, a[4 * i + 1]);
        hi = vfmaq_n_f64(hi, b1h, a[4 * i + 1]);
        lo = vfmaq_n_f64(lo, b2l, a[4 * i + 2]);
        hi = vfmaq_n_f64(hi, b2h, a[4 * i + 2]);
        lo = vfmaq_n_f64(lo, b3l, a[4 * i + 3]);
        hi = vfmaq_n_f64(hi, b3h, a[4 * i + 3]);
        vst1q_f64(c + 4 * i + 0, lo);
        vst1q_f64(c + 4 * i + 2, hi);
    }
}

}  // namespace poedh::kern

#endif  // POEDH_WITH_NEON
