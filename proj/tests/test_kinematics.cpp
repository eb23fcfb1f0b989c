#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstring>

#include "oracles.hpp"
#include "poedh/conversion.hpp"
#include "poedh/fixtures.hpp"
#include "poedh/kinematics.hpp"

using namespace poedh;

namespace {

// Independent FK: normalize by hand, accumulate with the naive matrix
// product, bypassing poe_fk's code path.
Transform fk_oracle(const PoeModel& m, const std::vector<double>& q) {
    Mat4 acc = Mat4::identity();
    for (std::size_t i = 0; i < m.joint_count(); ++i) {
        const auto [nt, qbar] = normalize(m.joints()[i].twist);
        const Transform step = twist_exp(nt, qbar * (q[i] + m.joints()[i].offset));
        acc = testo::mat4_mul_naive(acc, step.matrix());
    }
    acc = testo::mat4_mul_naive(acc, twist_exp(m.tool_twist()).matrix());
    return Transform::from_matrix(acc);
}

PoeModel random_base_model(testo::Rng& rng, std::size_t n, bool with_offsets) {
    std::vector<JointSpec> joints(n);
    for (std::size_t i = 0; i < n; ++i) {
        const int kind = static_cast<int>(rng.uniform(0, 3));
        NormalizedTwist nt;
        if (kind == 0) nt = testo::random_rotational(rng, false);
        else if (kind == 1) nt = testo::random_rotational(rng, true);
        else nt = testo::random_prismatic(rng);
        joints[i].twist = nt.twist.scaled(rng.uniform(0.8, 1.2));
        if (with_offsets) joints[i].offset = rng.uniform(-0.5, 0.5);
    }
    return PoeModel::base(std::move(joints), testo::random_twist(rng));
}

std::vector<double> random_config(testo::Rng& rng, std::size_t n) {
    std::vector<double> q(n);
    for (double& v : q) v = rng.angle();
    return q;
}

}  // namespace

TEST_CASE("q_screw covers the three joint couplings") {
    const Transform rev = q_screw(1, 0.0, kPi);
    CHECK(testo::max_abs_diff(rev, rot_z(kPi)) == 0.0);

    const Transform pri = q_screw(0, 1.0, 7.0);
    CHECK(testo::max_abs_diff(pri, trans_z(7.0)) == 0.0);

    testo::Rng rng(31);
    for (int it = 0; it < 100; ++it) {
        const double h = rng.uniform(-20, 20), q = rng.angle();
        const NormalizedTwist canon{{{0, 0, 1}, {0, 0, h}}, {Motion::Helical, h}};
        CHECK(testo::max_abs_diff(q_screw(1, h, q), twist_exp(canon, q)) < 1e-12);
    }
}

TEST_CASE("poe_fk of the nominal PUMA at zero is the tool translation") {
    const PoeModel puma = fixture("puma560_nominal");
    const std::vector<double> q(6, 0.0);
    const Transform H = poe_fk(puma, q);
    CHECK(testo::max_abs_diff(H.rotation(), Mat3::identity()) < 1e-15);
    CHECK((H.translation() - Vec3{250, 50, -20}).norm() < 1e-12);
}

TEST_CASE("poe_fk of an empty model with zero tool twist is the identity") {
    const PoeModel empty = PoeModel::base({}, Twist{});
    CHECK(testo::max_abs_diff(poe_fk(empty, {}), Transform{}) == 0.0);
}

TEST_CASE("poe_fk matches the per-joint accumulation oracle") {
    testo::Rng rng(32);
    for (int it = 0; it < 50; ++it) {
        const PoeModel m = random_base_model(rng, 3, false);
        const std::vector<double> q = random_config(rng, 3);
        CHECK(testo::max_abs_diff(poe_fk(m, q), fk_oracle(m, q)) < 1e-12);
    }
}

TEST_CASE("poe_fk rejects wrong conventions and arity") {
    std::vector<JointSpec> js(1);
    js[0].twist = Twist::from_array({0, 0, 1, 0, 0, 0});
    const PoeModel tool = PoeModel::tool(std::move(js), Twist{});
    const std::vector<double> q1{0.3};
    CHECK_THROWS_AS(poe_fk(tool, q1), ConventionError);

    const PoeModel base = fixture("puma560_nominal");
    const std::vector<double> q2{0.1, 0.2};
    CHECK_THROWS_AS(poe_fk(base, q2), ArityError);
}

TEST_CASE("joint offsets shift the joint variable exactly") {
    testo::Rng rng(33);
    for (int it = 0; it < 30; ++it) {
        PoeModel with = random_base_model(rng, 4, true);
        std::vector<JointSpec> stripped = with.joints();
        std::vector<double> q = random_config(rng, 4);
        std::vector<double> shifted = q;
        for (std::size_t i = 0; i < 4; ++i) {
            shifted[i] = q[i] + stripped[i].offset;
            stripped[i].offset = 0.0;
        }
        const PoeModel without = PoeModel::base(std::move(stripped), with.tool_twist());
        const Transform a = poe_fk(with, q);
        const Transform b = poe_fk(without, shifted);
        CHECK(std::memcmp(a.matrix().a.data(), b.matrix().a.data(), sizeof(Mat4)) == 0);
    }
}

TEST_CASE("dh_fk of the all-zero model is the identity") {
    DhModel m;
    m.rows.resize(2);
    const std::vector<double> q(2, 0.0);
    CHECK(testo::max_abs_diff(dh_fk(m, q), Transform{}) == 0.0);

    const std::vector<double> bad(3, 0.0);
    CHECK_THROWS_AS(dh_fk(m, bad), ArityError);
}

TEST_CASE("dh_fk at zero equals the product of the static rows") {
    testo::Rng rng(34);
    for (int it = 0; it < 30; ++it) {
        DhModel m;
        m.base = {rng.angle(), rng.uniform(-100, 100), rng.angle(), rng.uniform(-100, 100)};
        m.rows.resize(3);
        for (DhRow& row : m.rows) {
            row.theta = rng.angle();
            row.d = rng.uniform(-100, 100);
            row.alpha = rng.angle();
            row.a = rng.uniform(-100, 100);
            row.j = rng.uniform(0, 1) < 0.5 ? 0 : 1;
            row.k = row.j == 0 ? 1.0 : 0.0;
        }
        m.tool = {rng.angle(), rng.uniform(-100, 100)};
        Transform statics = m.base.transform();
        for (const DhRow& row : m.rows) statics = statics * row.static_transform();
        statics = statics * m.tool.transform();
        const std::vector<double> q(3, 0.0);
        CHECK(testo::max_abs_diff(dh_fk(m, q), statics) < 1e-12);
    }
}

TEST_CASE("converted nominal PUMA matches POE forward kinematics") {
    const PoeModel puma = fixture("puma560_nominal");
    const DhModel dh = poe_to_dh(puma);
    const std::vector<double> zero(6, 0.0);
    CHECK(testo::max_abs_diff(dh_fk(dh, zero), poe_fk(puma, zero)) < 1e-12);

    testo::Rng rng(35);
    for (int it = 0; it < 100; ++it) {
        const std::vector<double> q = random_config(rng, 6);
        CHECK(testo::max_abs_diff(dh_fk(dh, q), poe_fk(puma, q)) < 1e-12);
    }
}

TEST_CASE("tool_to_base preserves forward kinematics") {
    // Zero tool twist: reduction is the identity map on the joint twists.
    std::vector<JointSpec> js(1);
    js[0].twist = Twist::from_array({0, 0, 1, 0, 0, 0});
    const PoeModel trivial = PoeModel::tool(js, Twist{});
    const PoeModel reduced = tool_to_base(trivial);
    CHECK((reduced.joints()[0].twist.omega - Vec3{0, 0, 1}).norm() == 0.0);
    CHECK(reduced.joints()[0].twist.v.norm() == 0.0);

    testo::Rng rng(36);
    for (int it = 0; it < 40; ++it) {
        const std::size_t n = 1 + static_cast<std::size_t>(rng.uniform(0, 3));
        std::vector<JointSpec> joints(n);
        for (auto& j : joints) j.twist = testo::random_rotational(rng, it % 2 == 0).twist;
        const Twist xiT = testo::random_twist(rng);
        const PoeModel tool_model = PoeModel::tool(joints, xiT);
        const PoeModel base_model = tool_to_base(tool_model);

        const std::vector<double> q = random_config(rng, n);
        // Direct evaluation of the tool-form product.
        Mat4 ref = twist_exp(xiT).matrix();
        for (std::size_t i = 0; i < n; ++i) {
            const auto [nt, qbar] = normalize(joints[i].twist);
            ref = testo::mat4_mul_naive(ref, twist_exp(nt, qbar * q[i]).matrix());
        }
        CHECK(testo::max_abs_diff(poe_fk(base_model, q).matrix(), ref) < 1e-10);
    }
}

TEST_CASE("tool form of the nominal PUMA round-trips to the base twists") {
    const PoeModel puma = fixture("puma560_nominal");
    const Transform G = twist_exp(puma.tool_twist());
    // Express each base twist in the tool frame, then reduce back.
    std::vector<JointSpec> tool_joints = puma.joints();
    for (JointSpec& js : tool_joints) js.twist = adjoint_apply(G.inverse(), js.twist);
    const PoeModel reduced = tool_to_base(PoeModel::tool(tool_joints, puma.tool_twist()));
    for (std::size_t i = 0; i < 6; ++i) {
        const Twist& got = reduced.joints()[i].twist;
        const Twist& want = puma.joints()[i].twist;
        CHECK((got.omega - want.omega).norm() < 1e-10);
        CHECK((got.v - want.v).norm() < 1e-10);
    }
}

TEST_CASE("local_to_base with identity frames keeps the twists") {
    std::vector<JointSpec> joints(2);
    joints[0].twist = Twist::from_array({0, 0, 1, 0, 0, 0});
    joints[1].twist = Twist::from_array({0, 1, 0, 5, 0, -2});
    const PoeModel local = PoeModel::local(joints, {Transform{}, Transform{}, Transform{}});
    const PoeModel base = local_to_base(local);
    for (std::size_t i = 0; i < 2; ++i) {
        CHECK((base.joints()[i].twist.omega - joints[i].twist.omega).norm() == 0.0);
        CHECK((base.joints()[i].twist.v - joints[i].twist.v).norm() == 0.0);
    }
    CHECK(base.tool_twist().omega.norm() < 1e-12);
    CHECK(base.tool_twist().v.norm() < 1e-12);
}

TEST_CASE("local_to_base preserves forward kinematics") {
    testo::Rng rng(37);
    for (int it = 0; it < 40; ++it) {
        const std::size_t n = 2;
        std::vector<JointSpec> joints(n);
        for (auto& j : joints) j.twist = testo::random_rotational(rng, false).twist;
        std::vector<Transform> frames;
        for (std::size_t i = 0; i < n + 1; ++i) frames.push_back(testo::random_transform(rng));
        const PoeModel local = PoeModel::local(joints, frames);
        const PoeModel base = local_to_base(local);

        const std::vector<double> q = random_config(rng, n);
        Mat4 ref = Mat4::identity();
        for (std::size_t i = 0; i < n; ++i) {
            ref = testo::mat4_mul_naive(ref, frames[i].matrix());
            const auto [nt, qbar] = normalize(joints[i].twist);
            ref = testo::mat4_mul_naive(ref, twist_exp(nt, qbar * q[i]).matrix());
        }
        ref = testo::mat4_mul_naive(ref, frames[n].matrix());
        CHECK(testo::max_abs_diff(poe_fk(base, q).matrix(), ref) < 1e-10);
    }
}

TEST_CASE("local_to_base accumulates adjoints left to right") {
    testo::Rng rng(38);
    std::vector<JointSpec> joints(3);
    for (auto& j : joints) j.twist = testo::random_rotational(rng, false).twist;
    std::vector<Transform> frames;
    for (int i = 0; i < 4; ++i) frames.push_back(testo::random_transform(rng));
    const PoeModel base = local_to_base(PoeModel::local(joints, frames));

    Transform P;
    for (std::size_t i = 0; i < 3; ++i) {
        P = P * frames[i];
        const Twist expected = adjoint_apply(P, joints[i].twist);
        CHECK((base.joints()[i].twist.omega - expected.omega).norm() < 1e-12);
        CHECK((base.joints()[i].twist.v - expected.v).norm() < 1e-12);
    }
    P = P * frames[3];
    CHECK(testo::max_abs_diff(twist_exp(base.tool_twist()), P) < 1e-10);

    CHECK_THROWS_AS(local_to_base(fixture("puma560_nominal")), ConventionError);
    CHECK_THROWS_AS(PoeModel::local({joints[0]}, frames), FrameCountError);
}

TEST_CASE("dh_to_poe canonical cases") {
    DhModel one;
    one.rows.resize(1);  // all-zero revolute row
    const PoeModel poe = dh_to_poe(one);
    CHECK((poe.joints()[0].twist.omega - Vec3{0, 0, 1}).norm() == 0.0);
    CHECK(poe.joints()[0].twist.v.norm() == 0.0);
}

TEST_CASE("dh_to_poe of the converted PUMA is FK-equivalent to the fixture") {
    const PoeModel puma = fixture("puma560_nominal");
    const PoeModel back = dh_to_poe(poe_to_dh(puma));
    testo::Rng rng(39);
    for (int it = 0; it < 50; ++it) {
        const std::vector<double> q = random_config(rng, 6);
        CHECK(testo::max_abs_diff(poe_fk(back, q), poe_fk(puma, q)) < 1e-10);
    }
}

TEST_CASE("se3_log inverts twist_exp") {
    testo::Rng rng(40);
    for (int it = 0; it < 300; ++it) {
        const Transform H = testo::random_transform(rng);
        CHECK(testo::max_abs_diff(twist_exp(se3_log(H)), H) < 1e-10);
    }
    // Degenerate corners: identity, pure translation, half-turn rotations.
    CHECK(se3_log(Transform{}).omega.norm() == 0.0);
    const Transform tr(Mat3::identity(), {10, -4, 3});
    CHECK(testo::max_abs_diff(twist_exp(se3_log(tr)), tr) == 0.0);
    testo::Rng rng2(41);
    for (int it = 0; it < 50; ++it) {
        const Transform H(twist_exp(Twist{testo::Rng(it + 1).unit_vec() * kPi, {}}).rotation(),
                          rng2.point());
        CHECK(testo::max_abs_diff(twist_exp(se3_log(H)), H) < 1e-9);
    }
}

TEST_CASE("zero joint twists are rejected at model construction") {
    std::vector<JointSpec> joints(1);
    CHECK_THROWS_AS(PoeModel::base(std::move(joints), Twist{}), ZeroTwistError);
}

TEST_CASE("joint variables carry the unit of their motion class") {
    JointSpec rev;
    rev.twist = Twist::from_array({0, 0, 1, 0, 0, 0});
    CHECK(rev.unit() == JointUnit::Radians);

    JointSpec pri;
    pri.twist = Twist::from_array({0, 0, 0, 0, 1, 0});
    CHECK(pri.unit() == JointUnit::Millimeters);

    // A declared class wins over the numbers.
    pri.declared_class = MotionClass{Motion::Rotation, 0.0};
    CHECK(pri.unit() == JointUnit::Radians);
}
