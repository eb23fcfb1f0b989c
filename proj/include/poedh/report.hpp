#pragma once

// Human-facing text output. D-H tables print angles in degrees, lengths in
// mm, and pitch in mm/deg; the math core stays in rad/mm.

#include <string>

#include "poedh/identifiability.hpp"
#include "poedh/kinematics.hpp"

namespace poedh {

std::string format_dh_report(const DhModel& model);
std::string format_identifiability(const IdentifiabilityReport& report);
std::string format_transform(const Transform& H);

}  // namespace poedh
