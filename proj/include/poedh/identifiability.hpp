#pragma once

// Joint census and closed-form identifiable-parameter counts.

#include "poedh/kinematics.hpp"

namespace poedh {

struct JointCensus {
    int helical = 0;
    int revolute = 0;
    int prismatic = 0;

    int total() const { return helical + revolute + prismatic; }
};

struct IdentifiabilityReport {
    JointCensus census;
    // c1 = 6r + 3t + 6; c2 = 4r + 2t + 6; c3 = 5h + 4r + 2t + n + 6.
    int c1 = 0, c2 = 0, c3 = 0;
    // c3 term breakdown.
    int twist_params = 0;  // 5h + 4r + 2t
    int scale_params = 0;  // n, one normalization factor per joint
    int tool_params = 0;   // 6, initial tool placement
};

/// Counts joints by motion class; a declared class on a joint wins over
/// numeric classification.
JointCensus census(const PoeModel& model, double eps = kClassifyEps);

/// The three closed-form counts for a census.
IdentifiabilityReport counts(const JointCensus& c);

}  // namespace poedh
