#pragma once

// Robot model containers and forward kinematics for the POE conventions
// (base / tool / local) and the D-H convention, plus the reductions that map
// every POE variant onto the base form.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "poedh/liegroup.hpp"

namespace poedh {

enum class Convention { Base, Tool, Local };

enum class JointUnit { Radians, Millimeters };

struct JointSpec {
    Twist twist;          // unnormalized allowed
    double offset = 0.0;  // joint offset, rad or mm depending on class
    std::optional<MotionClass> declared_class;

    // Declared class if present, numeric classification otherwise.
    MotionClass effective_class(double eps = kClassifyEps) const;

    // Revolute/helical joints take radians, prismatic joints millimetres.
    JointUnit unit(double eps = kClassifyEps) const;
};

class PoeModel {
public:
    static PoeModel base(std::vector<JointSpec> joints, const Twist& tool_twist,
                         std::string name = {});
    static PoeModel tool(std::vector<JointSpec> joints, const Twist& tool_twist,
                         std::string name = {});
    // Local convention carries one transform per link boundary: n+1 frames.
    static PoeModel local(std::vector<JointSpec> joints, std::vector<Transform> frames,
                          std::string name = {});

    Convention convention() const { return convention_; }
    std::size_t joint_count() const { return joints_.size(); }
    const std::vector<JointSpec>& joints() const { return joints_; }
    const Twist& tool_twist() const { return tool_twist_; }
    const std::vector<Transform>& local_frames() const { return local_frames_; }
    const std::string& name() const { return name_; }
    void set_name(std::string n) { name_ = std::move(n); }

private:
    PoeModel() = default;

    Convention convention_ = Convention::Base;
    std::vector<JointSpec> joints_;
    Twist tool_twist_;                     // base/tool conventions
    std::vector<Transform> local_frames_;  // local convention, n+1 entries
    std::string name_;
};

// One static D-H transform Rz(theta) Tz(d) Rx(alpha) Tx(a).
struct DhStaticRow {
    double theta = 0.0, d = 0.0, alpha = 0.0, a = 0.0;
    Transform transform() const;
};

// Trailing tool row, Rz(theta) Tz(d) only.
struct DhToolRow {
    double theta = 0.0, d = 0.0;
    Transform transform() const;
};

// Inner row i: the joint screw Q_{j,k}(qbar * q_i) followed by the static
// link transform. j/k select the joint type: (1,0) revolute, (0,1) prismatic,
// (1,h) helical with pitch h in mm/rad. qbar is the joint-variable scale
// carried over from the unnormalized POE twist.
struct DhRow {
    double theta = 0.0, d = 0.0, alpha = 0.0, a = 0.0;
    int j = 1;
    double k = 0.0;
    double qbar = 1.0;
    bool offset_merged = false;

    Transform static_transform() const;
    MotionClass motion() const;
};

struct DhModel {
    DhStaticRow base;         // ^B H_0
    std::vector<DhRow> rows;  // ^{i-1} H_i for i = 1..n
    DhToolRow tool;           // ^n H_T
    std::string name;

    std::size_t joint_count() const { return rows.size(); }
};

/// Joint screw Q_{j,k}(q) = Rz(j q) Tz(k q).
Transform q_screw(int j, double k, double q);

/// Base-convention POE forward kinematics. Each joint twist is normalized
/// lazily; the normalization factor multiplies (q_i + offset_i).
Transform poe_fk(const PoeModel& model, std::span<const double> q,
                 double eps = kClassifyEps);

/// D-H forward kinematics: base row, then Q(qbar_i * q_i) and static row per
/// joint, then the tool row.
Transform dh_fk(const DhModel& model, std::span<const double> q);

/// Rewrites a tool-convention model in base form: each joint twist maps
/// through Ad(exp(tool twist)); forward kinematics is unchanged.
PoeModel tool_to_base(const PoeModel& model);

/// Rewrites a local-convention model in base form: joint i maps through
/// Ad(H_1 ... H_i) and the tool twist is the log of H_1 ... H_{n+1}; forward
/// kinematics is unchanged.
PoeModel local_to_base(const PoeModel& model);

// Any convention to base form; base models pass through untouched.
PoeModel reduce_to_base(const PoeModel& model);

/// Rebuilds a base-convention POE model from a D-H model: joint i is the
/// accumulated static transforms applied (via the adjoint) to the canonical
/// Z-axis screw of its type, and the tool twist is chosen so forward
/// kinematics agree for every q.
PoeModel dh_to_poe(const DhModel& model);

// Logarithm of a rigid transform: returns xi with twist_exp(xi) == H.
// Support routine for the convention reductions above.
Twist se3_log(const Transform& H);

}  // namespace poedh
