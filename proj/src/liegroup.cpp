#include "poedh/liegroup.hpp"

#include <algorithm>
#include <cmath>

#include "poedh/kernels.hpp"

namespace poedh {

double wrap_angle(double x) {
    double y = std::remainder(x, 2.0 * kPi);  // [-pi, pi]
    if (y == -kPi) y = kPi;
    return y;
}

double atan2_safe(double y, double x) {
    if (y == 0.0 && x == 0.0) return 0.0;
    return std::atan2(y, x);
}

bool is_rotation(const Mat3& R, double tol) {
    const Mat3 gram = R.transposed() * R;
    const Mat3 eye = Mat3::identity();
    for (std::size_t i = 0; i < 9; ++i) {
        if (std::abs(gram.a[i] - eye.a[i]) > tol) return false;
    }
    return std::abs(R.det() - 1.0) <= tol;
}

Vec3 solve3(const Mat3& A, const Vec3& b) {
    const double det = A.det();
    if (det == 0.0) throw Error("solve3: singular system");
    auto col_det = [&](int c) {
        Mat3 m = A;
        m(0, c) = b.x;
        m(1, c) = b.y;
        m(2, c) = b.z;
        return m.det();
    };
    return {col_det(0) / det, col_det(1) / det, col_det(2) / det};
}

Transform::Transform(const Mat3& R, const Vec3& t) {
    m_ = Mat4{};
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) m_(r, c) = R(r, c);
    m_(0, 3) = t.x;
    m_(1, 3) = t.y;
    m_(2, 3) = t.z;
    m_(3, 3) = 1.0;
}

Transform Transform::from_matrix(const Mat4& m) {
    Transform t;
    t.m_ = m;
    return t;
}

Mat3 Transform::rotation() const {
    Mat3 R;
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) R(r, c) = m_(r, c);
    return R;
}

Transform Transform::operator*(const Transform& o) const {
    Transform out;
    kern::mat4_mul(m_.a.data(), o.m_.a.data(), out.m_.a.data());
    return out;
}

Transform Transform::inverse() const {
    const Mat3 Rt = rotation().transposed();
    return Transform(Rt, -(Rt * translation()));
}

Vec3 Transform::apply(const Vec3& p) const {
    return rotation() * p + translation();
}

Mat3 skew(const Vec3& v) {
    Mat3 m;
    m.a = {0.0, -v.z, v.y, v.z, 0.0, -v.x, -v.y, v.x, 0.0};
    return m;
}

MotionClass classify(const Twist& xi, double eps) {
    if (!(eps > 0.0)) throw Error("classify: eps must be positive");
    const double nw = xi.omega.norm();
    if (nw < eps) {
        if (xi.v.norm() < eps) throw ZeroTwistError("classify: twist is zero within eps");
        return {Motion::Translation, std::numeric_limits<double>::infinity()};
    }
    const double h = dot(xi.omega, xi.v) / (nw * nw);
    if (std::abs(h) < eps) return {Motion::Rotation, 0.0};
    return {Motion::Helical, h};
}

std::pair<NormalizedTwist, double> normalize_as(const Twist& xi, const MotionClass& mc) {
    const double qbar = (mc.kind == Motion::Translation) ? xi.v.norm() : xi.omega.norm();
    if (!(qbar > 0.0)) throw ZeroTwistError("normalize: twist has no magnitude");
    NormalizedTwist out{{xi.omega / qbar, xi.v / qbar}, mc};
    if (mc.kind == Motion::Translation) {
        out.twist.omega = {0.0, 0.0, 0.0};  // below-eps rotation is noise
    } else if (mc.kind == Motion::Helical) {
        out.motion.pitch = dot(out.twist.omega, out.twist.v);
    }
    return {out, qbar};
}

std::pair<NormalizedTwist, double> normalize(const Twist& xi, double eps) {
    return normalize_as(xi, classify(xi, eps));
}

NormalizedTwist twist_from_axis(const Vec3& direction, const Vec3& point, double pitch) {
    if (std::abs(direction.norm() - 1.0) > 1e-12) {
        throw NonUnitDirectionError("twist_from_axis: direction must be unit length");
    }
    const Vec3 vbar = cross(point, direction) + direction * pitch;
    const MotionClass mc = (pitch == 0.0) ? MotionClass{Motion::Rotation, 0.0}
                                          : MotionClass{Motion::Helical, pitch};
    return {{direction, vbar}, mc};
}

Transform twist_exp(const NormalizedTwist& xibar, double q) {
    if (xibar.motion.kind == Motion::Translation) {
        return Transform(Mat3::identity(), xibar.twist.v * q);
    }
    const Vec3& w = xibar.twist.omega;
    const Vec3& v = xibar.twist.v;
    const double s = std::sin(q);
    const double c1 = 1.0 - std::cos(q);
    const Mat3 wx = skew(w);
    const Mat3 R = Mat3::identity() + wx * s + (wx * wx) * c1;
    // Translation written without the (I - R) product so nothing cancels:
    // t = (1-cos q) (w x v) - sin q (w x (w x v)) + q (w.v) w.
    const Vec3 wxv = cross(w, v);
    const Vec3 wwxv = cross(w, wxv);
    const Vec3 t = wxv * c1 - wwxv * s + w * (dot(w, v) * q);
    return Transform(R, t);
}

Transform twist_exp(const Twist& xi) {
    const double nw = xi.omega.norm();
    if (nw == 0.0) {
        return Transform(Mat3::identity(), xi.v);  // zero twist gives identity
    }
    const Vec3 w = xi.omega / nw;
    const double q = nw;
    const double s = std::sin(q);
    const double c1 = 1.0 - std::cos(q);
    const Mat3 wx = skew(w);
    const Mat3 R = Mat3::identity() + wx * s + (wx * wx) * c1;
    // Same closed form with v unscaled; s/q and c1/q stay finite as q -> 0.
    const Vec3 wxv = cross(w, xi.v);
    const Vec3 wwxv = cross(w, wxv);
    const Vec3 t = wxv * (c1 / q) - wwxv * (s / q) + w * dot(w, xi.v);
    return Transform(R, t);
}

Mat6 adjoint(const Transform& H) {
    const Mat3 R = H.rotation();
    const Mat3 tR = skew(H.translation()) * R;
    Mat6 ad;
    for (int r = 0; r < 3; ++r) {
        for (int c = 0; c < 3; ++c) {
            ad(r, c) = R(r, c);
            ad(r + 3, c) = tR(r, c);
            ad(r + 3, c + 3) = R(r, c);
        }
    }
    return ad;
}

Twist adjoint_apply(const Transform& H, const Twist& xi) {
    const Mat3 R = H.rotation();
    const Vec3 w = R * xi.omega;
    return {w, cross(H.translation(), w) + R * xi.v};
}

Transform rot_z(double theta) {
    const double c = std::cos(theta), s = std::sin(theta);
    Mat3 R;
    R.a = {c, -s, 0.0, s, c, 0.0, 0.0, 0.0, 1.0};
    return Transform(R, {});
}

Transform trans_z(double d) { return Transform(Mat3::identity(), {0.0, 0.0, d}); }

Transform rot_x(double alpha) {
    const double c = std::cos(alpha), s = std::sin(alpha);
    Mat3 R;
    R.a = {1.0, 0.0, 0.0, 0.0, c, -s, 0.0, s, c};
    return Transform(R, {});
}

Transform trans_x(double a) { return Transform(Mat3::identity(), {a, 0.0, 0.0}); }

Transform elem(Axis axis, ScrewKind kind, double value) {
    if (kind == ScrewKind::Rotate) {
        return axis == Axis::Z ? rot_z(value) : rot_x(value);
    }
    return axis == Axis::Z ? trans_z(value) : trans_x(value);
}

EulerZyx euler_zyx(const Mat3& R) {
    EulerZyx e;
    const double sy = std::clamp(-R(2, 0), -1.0, 1.0);
    e.ry = std::asin(sy);
    const double cy = std::sqrt(std::max(0.0, 1.0 - sy * sy));
    if (cy < 1e-9) {
        // cos(ry) ~ 0: rz and rx act about the same axis; fold into rz.
        e.gimbal_lock = true;
        e.rx = 0.0;
        e.rz = atan2_safe(-R(0, 1), R(1, 1));
    } else {
        e.rz = atan2_safe(R(1, 0), R(0, 0));
        e.rx = atan2_safe(R(2, 1), R(2, 2));
    }
    e.rz = wrap_angle(e.rz);
    e.rx = wrap_angle(e.rx);
    return e;
}

}  // namespace poedh
