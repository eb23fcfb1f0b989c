#include <atomic>
#include <cstdlib>
#include <cstring>

#include "poedh/kernels.hpp"

namespace poedh::kern {

namespace {

Mat4MulFn pick(Kernel k) noexcept {
    switch (k) {
        case Kernel::Scalar:
            return &mat4_mul_scalar;
#if defined(POEDH_WITH_AVX2)
        case Kernel::Avx2:
            return cpu_has_avx2() ? &mat4_mul_avx2 : nullptr;
#endif
#if defined(POEDH_WITH_NEON)
        case Kernel::Neon:
            return &mat4_mul_neon;
#endif
        default:
            return nullptr;
    }
}

Mat4MulFn resolve_auto() noexcept {
    if (const char* env = std::getenv("POEDH_KERNEL")) {
        if (std::strcmp(env, "scalar") == 0) return &mat4_mul_scalar;
        if (std::strcmp(env, "avx2") == 0) {
            if (Mat4MulFn f = pick(Kernel::Avx2)) return f;
        }
        if (std::strcmp(env, "neon") == 0) {
            if (Mat4MulFn f = pick(Kernel::Neon)) return f;
        }
        // Unknown or unavailable request falls through to autodetection.
    }
#if defined(POEDH_WITH_AVX2)
    if (cpu_has_avx2()) return &mat4_mul_avx2;
#endif
#if defined(POEDH_WITH_NEON)
    return &mat4_mul_neon;
#endif
    return &mat4_mul_scalar;
}

std::atomic<Mat4MulFn>& slot() noexcept {
    static std::atomic<Mat4MulFn> fn{nullptr};
    return fn;
}

Mat4MulFn active() noexcept {
    Mat4MulFn f = slot().load(std::memory_order_acquire);
    if (f == nullptr) {
        f = resolve_auto();
        slot().store(f, std::memory_order_release);
    }
    return f;
}

}  // namespace

bool cpu_has_avx2() noexcept {
#if defined(POEDH_WITH_AVX2)
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

bool select_mat4_kernel(Kernel k) noexcept {
    Mat4MulFn f = (k == Kernel::Auto) ? resolve_auto() : pick(k);
    if (f == nullptr) return false;
    slot().store(f, std::memory_order_release);
    return true;
}

const char* active_mat4_kernel_name() noexcept {
    const Mat4MulFn f = active();
#if defined(POEDH_WITH_AVX2)
    if (f == &mat4_mul_avx2) return "avx2";
#endif
#if defined(POEDH_WITH_NEON)
    if (f == &mat4_mul_neon) return "neon";
#endif
    (void)f;
    return "scalar";
}

void mat4_mul(const double* a, const double* b, double* c) noexcept {
    active()(a, b, c);
}

}  // namespace poedh::kern
