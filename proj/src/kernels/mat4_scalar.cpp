#include "poedh/kernels.hpp"

namespace poedh::kern {

void mat4_mul_scalar(const double* a, const double* b, double* c) noexcept {
    for (int i = 0; i < 4; ++i) {
        const double a0 = a[4 * i + 0];
        const double a1 = a[4 * i + 1];
        const double a2 = a[4 * i + 2];
        const double a3 = a[4 * i + 3];
        for (int j = 0; j < 4; ++j) {
            c[4 * i + j] = a0 * b[j] + a1 * b[4 + j] + a2 * b[8 + j] + a3 * b[12 + j];
        }
    }
}

}  // namespace poedh::kern
