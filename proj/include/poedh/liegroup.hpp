#pragma once

// SE(3)/se(3) machinery: twists, classification, normalization, the closed
// form exponential, adjoints, and elementary screws.
//
// Units are radians and millimetres throughout; a helical pitch is stored as
// mm per radian. Conversion to mm/deg happens only in reporting.

#include <limits>
#include <numbers>
#include <utility>

#include "poedh/errors.hpp"
#include "poedh/mat.hpp"

namespace poedh {

inline constexpr double kPi = std::numbers::pi;

// Default threshold separating rotation / translation / helical twists.
// Deliberately far below the ~1e-3 perturbations a calibrated model carries.
inline constexpr double kClassifyEps = 1e-8;

// Wraps an angle to (-pi, pi], with -pi mapped to +pi.
double wrap_angle(double x);

// atan2 that returns 0 for the degenerate (0, 0) input instead of relying on
// signed-zero behaviour.
double atan2_safe(double y, double x);

inline double deg(double rad) { return rad * 180.0 / kPi; }
inline double rad(double deg) { return deg * kPi / 180.0; }

using Rotation = Mat3;

// RtR == I and det == +1 within tol.
bool is_rotation(const Mat3& R, double tol = 1e-10);

// Rigid-body transform, stored as a homogeneous 4x4 whose bottom row is
// exactly (0,0,0,1). Composition goes through the dispatched mat4 kernel.
class Transform {
public:
    Transform() : m_(Mat4::identity()) {}
    Transform(const Mat3& R, const Vec3& t);

    static Transform from_matrix(const Mat4& m);  // trusts the caller

    const Mat4& matrix() const { return m_; }
    Mat3 rotation() const;
    Vec3 translation() const { return {m_.a[3], m_.a[7], m_.a[11]}; }

    Transform operator*(const Transform& o) const;
    Transform inverse() const;
    Vec3 apply(const Vec3& p) const;  // R p + t

private:
    Mat4 m_;
};

// se(3) element in (omega, v) coordinates. omega scales with radians, v with
// millimetres. Unnormalized twists are permitted everywhere.
struct Twist {
    Vec3 omega;
    Vec3 v;

    static Twist from_array(const std::array<double, 6>& c) {
        return {{c[0], c[1], c[2]}, {c[3], c[4], c[5]}};
    }
    std::array<double, 6> to_array() const {
        return {omega.x, omega.y, omega.z, v.x, v.y, v.z};
    }
    Twist scaled(double s) const { return {omega * s, v * s}; }
};

enum class Motion { Rotation, Translation, Helical };

struct MotionClass {
    Motion kind = Motion::Rotation;
    // mm/rad; 0 for rotation, +infinity for translation.
    double pitch = 0.0;
};

// Twist with unit rotation axis (rotational/helical) or unit direction
// (translational), plus its motion class. Produced by normalize() and
// twist_from_axis().
struct NormalizedTwist {
    Twist twist;
    MotionClass motion;
};

// Skew-symmetric matrix with skew(v) * w == cross(v, w).
Mat3 skew(const Vec3& v);

/// Classifies a twist by its motion type.
///
/// Translation when |omega| < eps, otherwise rotation or helical depending on
/// whether the pitch omega.v / |omega|^2 clears eps. Throws ZeroTwistError
/// when both components are below eps.
MotionClass classify(const Twist& xi, double eps = kClassifyEps);

/// Splits a twist into a normalized twist and its normalization factor qbar,
/// so that xi == xibar * qbar exactly. qbar = |omega| for rotational/helical
/// twists and |v| for translational ones.
std::pair<NormalizedTwist, double> normalize(const Twist& xi, double eps = kClassifyEps);

// Same split with the motion class imposed by the caller (used when a model
// declares a joint type that overrides numeric classification).
std::pair<NormalizedTwist, double> normalize_as(const Twist& xi, const MotionClass& mc);

/// Builds the normalized twist of a screw axis: unit direction, a point the
/// axis passes through, and pitch in mm/rad (0 for a pure rotation).
NormalizedTwist twist_from_axis(const Vec3& direction, const Vec3& point, double pitch);

/// Closed-form exponential of xibar * q. For rotational/helical twists q is
/// an angle in radians (helical adds pitch*q along the axis); for
/// translational twists q is a distance in mm.
Transform twist_exp(const NormalizedTwist& xibar, double q);

/// Exponential of a raw (possibly unnormalized) twist; the zero twist maps to
/// the identity.
Transform twist_exp(const Twist& xi);

/// 6x6 adjoint [R 0; t^R R] of a transform.
Mat6 adjoint(const Transform& H);

// Ad(H) * xi without forming the 6x6 matrix.
Twist adjoint_apply(const Transform& H, const Twist& xi);

enum class Axis { X, Z };
enum class ScrewKind { Rotate, Translate };

/// Elementary screw about/along a coordinate axis (rad or mm).
Transform elem(Axis axis, ScrewKind kind, double value);

// Shorthands for the four elementary transforms the D-H convention uses.
Transform rot_z(double theta);
Transform trans_z(double d);
Transform rot_x(double alpha);
Transform trans_x(double a);

struct EulerZyx {
    double rz = 0.0, ry = 0.0, rx = 0.0;
    bool gimbal_lock = false;  // |cos(ry)| < 1e-9; rx forced to 0 then
};

/// ZYX Euler decomposition: Rz(rz) * Ry(ry) * Rx(rx) reconstructs R.
/// Angles lie in (-pi, pi].
EulerZyx euler_zyx(const Mat3& R);

}  // namespace poedh
