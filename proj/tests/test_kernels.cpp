#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "oracles.hpp"
#include "poedh/kernels.hpp"
#include "poedh/mat.hpp"

using namespace poedh;

namespace {

Mat4 random_mat4(testo::Rng& rng, double range) {
    Mat4 m;
    for (double& v : m.a) v = rng.uniform(-range, range);
    return m;
}

}  // namespace

TEST_CASE("scalar kernel matches the naive triple loop exactly") {
    testo::Rng rng(11);
    for (int it = 0; it < 200; ++it) {
        const Mat4 a = random_mat4(rng, 100.0);
        const Mat4 b = random_mat4(rng, 100.0);
        Mat4 c;
        kern::mat4_mul_scalar(a.a.data(), b.a.data(), c.a.data());
        const Mat4 ref = testo::mat4_mul_naive(a, b);
        CHECK(testo::max_abs_diff(c, ref) == 0.0);  // same op order, -ffp-contract=off
    }
}

#if defined(POEDH_WITH_AVX2)
TEST_CASE("avx2 kernel is equivalent to the scalar reference") {
    if (!kern::cpu_has_avx2()) return;
    testo::Rng rng(12);
    for (int it = 0; it < 500; ++it) {
        const Mat4 a = random_mat4(rng, 500.0);
        const Mat4 b = random_mat4(rng, 500.0);
        Mat4 cs, cv;
        kern::mat4_mul_scalar(a.a.data(), b.a.data(), cs.a.data());
        kern::mat4_mul_avx2(a.a.data(), b.a.data(), cv.a.data());
        for (std::size_t i = 0; i < 16; ++i) {
            // FMA changes the rounding, nothing else.
            CHECK(std::abs(cs.a[i] - cv.a[i]) <=
                  1e-10 * std::max(1.0, std::abs(cs.a[i])));
        }
    }
}
#endif

TEST_CASE("kernel selection switches the dispatched product") {
    REQUIRE(kern::select_mat4_kernel(kern::Kernel::Scalar));
    CHECK(std::string(kern::active_mat4_kernel_name()) == "scalar");

    testo::Rng rng(13);
    const Mat4 a = random_mat4(rng, 10.0);
    const Mat4 b = random_mat4(rng, 10.0);
    Mat4 via_scalar;
    kern::mat4_mul(a.a.data(), b.a.data(), via_scalar.a.data());
    CHECK(testo::max_abs_diff(via_scalar, testo::mat4_mul_naive(a, b)) == 0.0);

#if defined(POEDH_WITH_AVX2)
    if (kern::cpu_has_avx2()) {
        REQUIRE(kern::select_mat4_kernel(kern::Kernel::Avx2));
        CHECK(std::string(kern::active_mat4_kernel_name()) == "avx2");
        Mat4 via_avx2;
        kern::mat4_mul(a.a.data(), b.a.data(), via_avx2.a.data());
        CHECK(testo::max_abs_diff(via_avx2, via_scalar) < 1e-10);
    }
#else
    CHECK_FALSE(kern::select_mat4_kernel(kern::Kernel::Avx2));
#endif

    REQUIRE(kern::select_mat4_kernel(kern::Kernel::Auto));
}

TEST_CASE("transform composition stays rigid through the dispatched kernel") {
    testo::Rng rng(14);
    for (int it = 0; it < 100; ++it) {
        const Transform a = testo::random_transform(rng);
        const Transform b = testo::random_transform(rng);
        const Transform c = a * b;
        CHECK(is_rotation(c.rotation(), 1e-12));
        // Bottom row must survive bit-exactly.
        CHECK(c.matrix()(3, 0) == 0.0);
        CHECK(c.matrix()(3, 1) == 0.0);
        CHECK(c.matrix()(3, 2) == 0.0);
        CHECK(c.matrix()(3, 3) == 1.0);
    }
}

TEST_CASE("composition is associative and inverse cancels") {
    testo::Rng rng(15);
    for (int it = 0; it < 100; ++it) {
        const Transform a = testo::random_transform(rng);
        const Transform b = testo::random_transform(rng);
        const Transform c = testo::random_transform(rng);
        CHECK(testo::max_abs_diff((a * b) * c, a * (b * c)) < 1e-10);
        CHECK(testo::max_abs_diff(a.inverse() * a, Transform{}) < 1e-10);
    }
}
