#include "poedh/kinematics.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace poedh {

MotionClass JointSpec::effective_class(double eps) const {
    if (declared_class) return *declared_class;
    return classify(twist, eps);
}

JointUnit JointSpec::unit(double eps) const {
    return effective_class(eps).kind == Motion::Translation ? JointUnit::Millimeters
                                                            : JointUnit::Radians;
}

namespace {

void check_joints(const std::vector<JointSpec>& joints) {
    for (std::size_t i = 0; i < joints.size(); ++i) {
        const Twist& xi = joints[i].twist;
        if (xi.omega.norm() == 0.0 && xi.v.norm() == 0.0) {
            throw ZeroTwistError("joint " + std::to_string(i) + ": twist is zero");
        }
    }
}

}  // namespace

PoeModel PoeModel::base(std::vector<JointSpec> joints, const Twist& tool_twist,
                        std::string name) {
    check_joints(joints);
    PoeModel m;
    m.convention_ = Convention::Base;
    m.joints_ = std::move(joints);
    m.tool_twist_ = tool_twist;
    m.name_ = std::move(name);
    return m;
}

PoeModel PoeModel::tool(std::vector<JointSpec> joints, const Twist& tool_twist,
                        std::string name) {
    check_joints(joints);
    PoeModel m;
    m.convention_ = Convention::Tool;
    m.joints_ = std::move(joints);
    m.tool_twist_ = tool_twist;
    m.name_ = std::move(name);
    return m;
}

PoeModel PoeModel::local(std::vector<JointSpec> joints, std::vector<Transform> frames,
                         std::string name) {
    check_joints(joints);
    if (frames.size() != joints.size() + 1) {
        throw FrameCountError("local model with " + std::to_string(joints.size()) +
                              " joints needs " + std::to_string(joints.size() + 1) +
                              " frames, got " + std::to_string(frames.size()));
    }
    PoeModel m;
    m.convention_ = Convention::Local;
    m.joints_ = std::move(joints);
    m.local_frames_ = std::move(frames);
    m.name_ = std::move(name);
    return m;
}

Transform DhStaticRow::transform() const {
    return rot_z(theta) * trans_z(d) * rot_x(alpha) * trans_x(a);
}

Transform DhToolRow::transform() const { return rot_z(theta) * trans_z(d); }

Transform DhRow::static_transform() const {
    return rot_z(theta) * trans_z(d) * rot_x(alpha) * trans_x(a);
}

MotionClass DhRow::motion() const {
    if (j == 0) return {Motion::Translation, std::numeric_limits<double>::infinity()};
    if (k == 0.0) return {Motion::Rotation, 0.0};
    return {Motion::Helical, k};
}

Transform q_screw(int j, double k, double q) {
    // Rz(j q) Tz(k q); Rz fixes the z axis so the product collapses to one
    // rotation plus one translation.
    const double ang = static_cast<double>(j) * q;
    const double c = std::cos(ang), s = std::sin(ang);
    Mat3 R;
    R.a = {c, -s, 0.0, s, c, 0.0, 0.0, 0.0, 1.0};
    return Transform(R, {0.0, 0.0, k * q});
}

Transform poe_fk(const PoeModel& model, std::span<const double> q, double eps) {
    if (model.convention() != Convention::Base) {
        throw ConventionError("poe_fk requires a base-convention model; reduce first");
    }
    if (q.size() != model.joint_count()) {
        throw ArityError("poe_fk: model has " + std::to_string(model.joint_count()) +
                         " joints, got " + std::to_string(q.size()) + " values");
    }
    Transform H;
    for (std::size_t i = 0; i < model.joint_count(); ++i) {
        const JointSpec& js = model.joints()[i];
        const auto [nt, qbar] = normalize_as(js.twist, js.effective_class(eps));
        H = H * twist_exp(nt, qbar * (q[i] + js.offset));
    }
    return H * twist_exp(model.tool_twist());
}

Transform dh_fk(const DhModel& model, std::span<const double> q) {
    if (q.size() != model.joint_count()) {
        throw ArityError("dh_fk: model has " + std::to_string(model.joint_count()) +
                         " joints, got " + std::to_string(q.size()) + " values");
    }
    Transform H = model.base.transform();
    for (std::size_t i = 0; i < model.rows.size(); ++i) {
        const DhRow& row = model.rows[i];
        H = H * q_screw(row.j, row.k, row.qbar * q[i]) * row.static_transform();
    }
    return H * model.tool.transform();
}

PoeModel tool_to_base(const PoeModel& model) {
    if (model.convention() != Convention::Tool) {
        throw ConventionError("tool_to_base requires a tool-convention model");
    }
    const Transform G = twist_exp(model.tool_twist());
    std::vector<JointSpec> joints = model.joints();
    for (JointSpec& js : joints) {
        js.twist = adjoint_apply(G, js.twist);
    }
    return PoeModel::base(std::move(joints), model.tool_twist(), model.name());
}

PoeModel local_to_base(const PoeModel& model) {
    if (model.convention() != Convention::Local) {
        throw ConventionError("local_to_base requires a local-convention model");
    }
    std::vector<JointSpec> joints = model.joints();
    Transform P;  // running product H_1 ... H_i
    for (std::size_t i = 0; i < joints.size(); ++i) {
        P = P * model.local_frames()[i];
        joints[i].twist = adjoint_apply(P, joints[i].twist);
    }
    P = P * model.local_frames()[joints.size()];
    return PoeModel::base(std::move(joints), se3_log(P), model.name());
}

PoeModel reduce_to_base(const PoeModel& model) {
    switch (model.convention()) {
        case Convention::Base:
            return model;
        case Convention::Tool:
            return tool_to_base(model);
        case Convention::Local:
            return local_to_base(model);
    }
    throw Error("reduce_to_base: unknown convention");
}

PoeModel dh_to_poe(const DhModel& model) {
    std::vector<JointSpec> joints;
    joints.reserve(model.joint_count());
    Transform P = model.base.transform();  // statics ahead of joint i's screw
    for (const DhRow& row : model.rows) {
        const Twist zeta = (row.j == 1) ? Twist{{0, 0, 1}, {0, 0, row.k}}
                                        : Twist{{0, 0, 0}, {0, 0, 1}};
        JointSpec js;
        js.twist = adjoint_apply(P, zeta.scaled(row.qbar));
        js.declared_class = row.motion();
        joints.push_back(js);
        P = P * row.static_transform();
    }
    P = P * model.tool.transform();
    return PoeModel::base(std::move(joints), se3_log(P), model.name);
}

Twist se3_log(const Transform& H) {
    const Mat3 R = H.rotation();
    const Vec3 t = H.translation();
    const Vec3 vee{R(2, 1) - R(1, 2), R(0, 2) - R(2, 0), R(1, 0) - R(0, 1)};
    const double cq = std::clamp((R.trace() - 1.0) / 2.0, -1.0, 1.0);
    // atan2 of (|sin q|, cos q) keeps full precision near q = pi, where the
    // trace alone would surrender half the digits.
    const double q = std::atan2(0.5 * vee.norm(), cq);
    if (q < 1e-12) {
        return {{0.0, 0.0, 0.0}, t};  // rotation below resolution
    }
    Vec3 w;
    if (q < 3.0) {
        w = vee / vee.norm();
    } else {
        // Near pi the antisymmetric part degrades; use (R + Rt)/2 instead.
        const double one_minus_c = 1.0 - cq;
        auto axis_sq = [&](int i) {
            return std::max(0.0, (R(i, i) - cq) / one_minus_c);
        };
        const Vec3 d{std::sqrt(axis_sq(0)), std::sqrt(axis_sq(1)), std::sqrt(axis_sq(2))};
        int imax = 0;
        if (d.y > d.x) imax = 1;
        if (d.z > (imax == 0 ? d.x : d.y)) imax = 2;
        const double off01 = (R(0, 1) + R(1, 0)) / (2.0 * one_minus_c);
        const double off02 = (R(0, 2) + R(2, 0)) / (2.0 * one_minus_c);
        const double off12 = (R(1, 2) + R(2, 1)) / (2.0 * one_minus_c);
        switch (imax) {
            case 0: w = {d.x, off01 / d.x, off02 / d.x}; break;
            case 1: w = {off01 / d.y, d.y, off12 / d.y}; break;
            default: w = {off02 / d.z, off12 / d.z, d.z}; break;
        }
        // Pick the sign consistent with the antisymmetric part when it is
        // still readable; at exactly pi either sign reproduces R.
        if (dot(vee, w) < 0.0) w = -w;
    }
    w = w / w.norm();
    // Invert t = [(1-cos q) w^ - sin q w^2 + q w w^T] vbar, the same closed
    // form twist_exp evaluates.
    const Mat3 wx = skew(w);
    Mat3 wwt;
    const double wc[3] = {w.x, w.y, w.z};
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) wwt(r, c) = wc[r] * wc[c];
    const Mat3 A = wx * (1.0 - cq) - (wx * wx) * std::sin(q) + wwt * q;
    const Vec3 vbar = solve3(A, t);
    return Twist{w, vbar}.scaled(q);
}

}  // namespace poedh
