#include "poedh/conversion.hpp"

#include <algorithm>
#include <cmath>

namespace poedh {

namespace {

// Right side of the gimbal test in the tool decomposition: sin(alpha1)
// below this means the middle X rotation is 0 or pi.
constexpr double kGimbalEps = 1e-9;

// An xy translation above this fixes theta1 in the gimbal case; below it the
// whole Z rotation folds into theta1 instead.
constexpr double kGimbalTxyEps = 1e-11;

// Shared solver for rotational screws (unit omega). h is the pitch the
// emitted screw should carry (zero for the revolute specialization).
DhFactor factor_unit_rotational(const Vec3& w, const Vec3& v, double h) {
    DhFactor f;
    f.pitch = h;
    if (1.0 - std::abs(w.z) < kParallelAxisEps) {
        // Axis (anti)parallel to Z: d is arbitrary here (parallel adjacent
        // axes), pinned to zero.
        f.theta = atan2_safe(v.x / w.z, -v.y / w.z);
        f.d = 0.0;
        f.alpha = std::acos(std::clamp(w.z, -1.0, 1.0));
        f.a = std::hypot(v.x, v.y);
    } else {
        const double rhs = h * w.z - v.z;  // a sin(alpha)
        double alpha;
        if (std::abs(rhs) < kZeroLinkEps) {
            alpha = std::acos(std::clamp(w.z, -1.0, 1.0));
            f.a = 0.0;
        } else {
            // Nonnegative link length: the sign of rhs picks the branch.
            alpha = std::copysign(std::acos(std::clamp(w.z, -1.0, 1.0)), rhs);
            f.a = rhs / std::sin(alpha);
        }
        const double sa = std::sin(alpha);
        f.alpha = alpha;
        f.theta = atan2_safe(w.x / sa, -w.y / sa);
        f.d = (w.x * v.y - w.y * v.x) / (w.x * w.x + w.y * w.y);
    }
    return f;
}

}  // namespace

Transform DhFactor::transform() const {
    return rot_z(theta) * trans_z(d) * rot_x(alpha) * trans_x(a);
}

DhFactor factor_helical(const NormalizedTwist& xibar) {
    if (xibar.motion.kind == Motion::Translation) {
        throw NotRotationalError("factor_helical: twist is translational");
    }
    const Vec3& w = xibar.twist.omega;
    const Vec3& v = xibar.twist.v;
    return factor_unit_rotational(w, v, dot(w, v));
}

DhFactor factor_revolute(const NormalizedTwist& xibar) {
    if (xibar.motion.kind == Motion::Translation) {
        throw NotRotationalError("factor_revolute: twist is translational");
    }
    return factor_unit_rotational(xibar.twist.omega, xibar.twist.v, 0.0);
}

DhFactor factor_prismatic(const NormalizedTwist& xibar) {
    if (xibar.motion.kind != Motion::Translation) {
        throw NotTranslationalError("factor_prismatic: twist is rotational");
    }
    const Vec3& v = xibar.twist.v;
    DhFactor f;
    f.alpha = std::acos(std::clamp(v.z, -1.0, 1.0));
    const double sa = std::sin(f.alpha);
    // Frame Z follows (sin theta sin alpha, -cos theta sin alpha, cos alpha).
    f.theta = (sa < 1e-12) ? 0.0 : atan2_safe(v.x / sa, -v.y / sa);
    return f;
}

ToolDecomposition decompose_transform(const Transform& G) {
    const Mat3 R = G.rotation();
    const Vec3 t = G.translation();
    const double r22 = std::clamp(R(2, 2), -1.0, 1.0);
    const double sa = std::sqrt(std::max(0.0, 1.0 - r22 * r22));
    ToolDecomposition out;
    if (sa < kGimbalEps) {
        // Rotation is Rz(total) or Rz(total) Rx(pi); the theta1/theta2 split
        // is free, so let any xy translation choose it.
        const double alpha = (r22 > 0.0) ? 0.0 : kPi;
        const double theta_total = atan2_safe(R(1, 0), R(0, 0));
        const double txy = std::hypot(t.x, t.y);
        const double theta1 = (txy > kGimbalTxyEps) ? std::atan2(t.y, t.x) : theta_total;
        const double c1 = std::cos(theta1), s1 = std::sin(theta1);
        out.h1.theta = wrap_angle(theta1);
        out.h1.d = t.z;
        out.h1.alpha = alpha;
        out.h1.a = c1 * t.x + s1 * t.y;
        out.theta2 = wrap_angle(alpha == 0.0 ? theta_total - theta1 : theta1 - theta_total);
        out.d2 = 0.0;
    } else {
        const double alpha = std::acos(r22);
        const double theta1 = atan2_safe(R(0, 2), -R(1, 2));
        const double theta2 = atan2_safe(R(2, 0), R(2, 1));
        const double c1 = std::cos(theta1), s1 = std::sin(theta1);
        out.h1.theta = wrap_angle(theta1);
        out.h1.alpha = alpha;
        out.h1.a = c1 * t.x + s1 * t.y;
        out.d2 = (s1 * t.x - c1 * t.y) / sa;
        out.h1.d = t.z - r22 * out.d2;
        out.theta2 = wrap_angle(theta2);
    }
    return out;
}

ToolDecomposition decompose_tool(const Twist& xi_T) {
    return decompose_transform(twist_exp(xi_T));
}

DhModel poe_to_dh(const PoeModel& model, double eps) {
    const PoeModel m = reduce_to_base(model);
    const std::size_t n = m.joint_count();

    DhModel dh;
    dh.name = m.name();
    dh.rows.resize(n);

    std::vector<double> delta(n, 0.0);  // offsets scaled by qbar, merged below
    Transform acc;                      // product of emitted static factors

    for (std::size_t i = 0; i < n; ++i) {
        const JointSpec& js = m.joints()[i];
        const MotionClass mc = js.effective_class(eps);
        const auto [nt, qbar] = normalize_as(js.twist, mc);

        // Express the screw in the frame reached so far, then factor it.
        const Twist prop = adjoint_apply(acc.inverse(), nt.twist);
        const NormalizedTwist pnt{prop, nt.motion};

        DhFactor f;
        switch (mc.kind) {
            case Motion::Rotation:
                f = factor_revolute(pnt);
                dh.rows[i].j = 1;
                dh.rows[i].k = 0.0;
                break;
            case Motion::Helical:
                f = factor_helical(pnt);
                dh.rows[i].j = 1;
                dh.rows[i].k = f.pitch;
                break;
            case Motion::Translation:
                f = factor_prismatic(pnt);
                dh.rows[i].j = 0;
                dh.rows[i].k = 1.0;
                break;
        }
        dh.rows[i].qbar = qbar;
        delta[i] = qbar * js.offset;

        // The factor's statics land one slot earlier: joint 1's factor is the
        // base row, joint i's factor closes row i-1.
        if (i == 0) {
            dh.base = {f.theta, f.d, f.alpha, f.a};
        } else {
            dh.rows[i - 1].theta = f.theta;
            dh.rows[i - 1].d = f.d;
            dh.rows[i - 1].alpha = f.alpha;
            dh.rows[i - 1].a = f.a;
        }
        acc = acc * f.transform();
    }

    // Remaining right factor: split exp(xi_T'), expressed in the last emitted
    // frame, into the final inner row and the tool row.
    const Transform residual = acc.inverse() * twist_exp(m.tool_twist());
    const ToolDecomposition td = decompose_transform(residual);
    if (n == 0) {
        dh.base = {td.h1.theta, td.h1.d, td.h1.alpha, td.h1.a};
    } else {
        dh.rows[n - 1].theta = td.h1.theta;
        dh.rows[n - 1].d = td.h1.d;
        dh.rows[n - 1].alpha = td.h1.alpha;
        dh.rows[n - 1].a = td.h1.a;
    }
    dh.tool = {td.theta2, td.d2};

    // Q(q + offset) = Q(q) Q(offset); the static part premultiplies the row
    // that follows the joint.
    for (std::size_t i = 0; i < n; ++i) {
        if (delta[i] == 0.0) continue;
        dh.rows[i].theta += static_cast<double>(dh.rows[i].j) * delta[i];
        dh.rows[i].d += dh.rows[i].k * delta[i];
        dh.rows[i].offset_merged = true;
    }

    dh.base.theta = wrap_angle(dh.base.theta);
    dh.base.alpha = wrap_angle(dh.base.alpha);
    for (DhRow& row : dh.rows) {
        row.theta = wrap_angle(row.theta);
        row.alpha = wrap_angle(row.alpha);
    }
    dh.tool.theta = wrap_angle(dh.tool.theta);
    return dh;
}

}  // namespace poedh
