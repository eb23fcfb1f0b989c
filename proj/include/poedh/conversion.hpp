#pragma once

// Analytic POE -> D-H conversion: the per-joint screw factorizations, the
// tool decomposition, and the adjoint-propagation pipeline that strings them
// together.

#include "poedh/kinematics.hpp"
#include "poedh/liegroup.hpp"

namespace poedh {

// Triggers the parallel-axis branch of the rotational factorization. Chosen
// so the sin(alpha) division stays stable while real calibration
// perturbations (~1e-3 on the axis) never hit it.
inline constexpr double kParallelAxisEps = 1e-9;

// Below this the right side of the a*sin(alpha) equation counts as zero and
// the +arccos branch is taken with a = 0.
inline constexpr double kZeroLinkEps = 1e-12;

// Static factor H = Rz(theta) Tz(d) Rx(alpha) Tx(a) extracted from a screw,
// plus the screw pitch (mm/rad, 0 unless helical).
struct DhFactor {
    double theta = 0.0, d = 0.0, alpha = 0.0, a = 0.0;
    double pitch = 0.0;

    Transform transform() const;
};

/// Factors a unit-axis helical screw so that
/// exp(xibar q) == H Rz(q) Tz(pitch q) H^-1 with pitch = omega . v.
/// Throws NotRotationalError for translational input.
DhFactor factor_helical(const NormalizedTwist& xibar);

/// Rotational specialization of factor_helical (pitch forced to zero):
/// exp(xibar q) == H Rz(q) H^-1.
DhFactor factor_revolute(const NormalizedTwist& xibar);

/// Factors a unit-direction translational screw so that
/// exp(xibar q) == H Tz(q) H^-1. Only theta/alpha are meaningful; the axis
/// location is immaterial for a translation, so d = a = 0.
/// Throws NotTranslationalError for rotational input.
DhFactor factor_prismatic(const NormalizedTwist& xibar);

struct ToolDecomposition {
    DhFactor h1;         // Rz(theta1) Tz(d1) Rx(alpha1) Tx(a1); pitch unused
    double theta2 = 0.0;
    double d2 = 0.0;     // H2 = Rz(theta2) Tz(d2)
};

/// Splits a rigid transform into H1 * H2 with H1 = Rz Tz Rx Tx and
/// H2 = Rz Tz. The rotation is a ZXZ Euler factorization; the translations
/// follow from a linear solve.
ToolDecomposition decompose_transform(const Transform& G);

/// decompose_transform applied to exp(xi_T).
ToolDecomposition decompose_tool(const Twist& xi_T);

/// Full conversion pipeline. Tool/local models are reduced to base form
/// first; joint offsets are merged into the static rows (theta for
/// revolute/helical, d for prismatic, scaled by the joint's qbar).
DhModel poe_to_dh(const PoeModel& model, double eps = kClassifyEps);

}  // namespace poedh
