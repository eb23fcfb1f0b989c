#pragma once

// Small fixed-size dense types used throughout the toolkit. Everything is
// row-major, double precision, value-semantic.

#include <array>
#include <cmath>
#include <cstddef>

namespace poedh {

struct Vec3 {
    double x = 0.0, y = 0.0, z = 0.0;

    double norm() const { return std::sqrt(x * x + y * y + z * z); }

    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    Vec3 operator/(double s) const { return {x / s, y / s, z / s}; }
    Vec3 operator-() const { return {-x, -y, -z}; }
};

inline double dot(const Vec3& a, const Vec3& b) {
    return a.x * b.x + a.y * b.y + a.z * b.z;
}

inline Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

struct Mat3 {
    std::array<double, 9> a{};  // row-major

    static Mat3 identity() {
        Mat3 m;
        m.a = {1, 0, 0, 0, 1, 0, 0, 0, 1};
        return m;
    }

    double& operator()(int r, int c) { return a[static_cast<std::size_t>(3 * r + c)]; }
    double operator()(int r, int c) const { return a[static_cast<std::size_t>(3 * r + c)]; }

    Mat3 operator+(const Mat3& o) const {
        Mat3 m;
        for (std::size_t i = 0; i < 9; ++i) m.a[i] = a[i] + o.a[i];
        return m;
    }
    Mat3 operator-(const Mat3& o) const {
        Mat3 m;
        for (std::size_t i = 0; i < 9; ++i) m.a[i] = a[i] - o.a[i];
        return m;
    }
    Mat3 operator*(double s) const {
        Mat3 m;
        for (std::size_t i = 0; i < 9; ++i) m.a[i] = a[i] * s;
        return m;
    }
    Mat3 operator*(const Mat3& o) const {
        Mat3 m;
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c)
                m(r, c) = (*this)(r, 0) * o(0, c) + (*this)(r, 1) * o(1, c) +
                          (*this)(r, 2) * o(2, c);
        return m;
    }
    Vec3 operator*(const Vec3& v) const {
        return {a[0] * v.x + a[1] * v.y + a[2] * v.z,
                a[3] * v.x + a[4] * v.y + a[5] * v.z,
                a[6] * v.x + a[7] * v.y + a[8] * v.z};
    }

    Mat3 transposed() const {
        Mat3 m;
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) m(r, c) = (*this)(c, r);
        return m;
    }

    double trace() const { return a[0] + a[4] + a[8]; }

    double det() const {
        return a[0] * (a[4] * a[8] - a[5] * a[7]) - a[1] * (a[3] * a[8] - a[5] * a[6]) +
               a[2] * (a[3] * a[7] - a[4] * a[6]);
    }
};

// Solves A x = b for a well-conditioned 3x3 system (Cramer).
Vec3 solve3(const Mat3& A, const Vec3& b);

// Row-major 4x4, the type the composition kernels operate on.
struct Mat4 {
    alignas(32) std::array<double, 16> a{};

    static Mat4 identity() {
        Mat4 m;
        m.a[0] = m.a[5] = m.a[10] = m.a[15] = 1.0;
        return m;
    }

    double& operator()(int r, int c) { return a[static_cast<std::size_t>(4 * r + c)]; }
    double operator()(int r, int c) const { return a[static_cast<std::size_t>(4 * r + c)]; }
};

using Vec6 = std::array<double, 6>;

struct Mat6 {
    std::array<double, 36> a{};

    static Mat6 identity() {
        Mat6 m;
        for (int i = 0; i < 6; ++i) m(i, i) = 1.0;
        return m;
    }

    double& operator()(int r, int c) { return a[static_cast<std::size_t>(6 * r + c)]; }
    double operator()(int r, int c) const { return a[static_cast<std::size_t>(6 * r + c)]; }

    Mat6 operator*(const Mat6& o) const {
        Mat6 m;
        for (int r = 0; r < 6; ++r)
            for (int c = 0; c < 6; ++c) {
                double s = 0.0;
                for (int k = 0; k < 6; ++k) s += (*this)(r, k) * o(k, c);
                m(r, c) = s;
            }
        return m;
    }
    Vec6 operator*(const Vec6& v) const {
        Vec6 out{};
        for (int r = 0; r < 6; ++r) {
            double s = 0.0;
            for (int k = 0; k < 6; ++k) s += (*this)(r, k) * v[static_cast<std::size_t>(k)];
            out[static_cast<std::size_t>(r)] = s;
        }
        return out;
    }
};

}  // namespace poedh
