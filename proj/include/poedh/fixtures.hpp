#pragma once

// Embedded reference models. "puma560_nominal" and "puma560_actual" are the
// published six-revolute PUMA 560 twist sets (base convention, offsets zero);
// the actual set carries the manufacturing/assembly perturbations and is
// deliberately left unnormalized.

#include <string>
#include <vector>

#include "poedh/kinematics.hpp"

namespace poedh {

std::vector<std::string> fixture_names();

// Throws ParseError for an unknown name.
PoeModel fixture(const std::string& name);

// Resolves "fixture:NAME" to an embedded model, anything else to a file path.
bool is_fixture_ref(const std::string& ref);
PoeModel load_poe(const std::string& ref);  // fixture ref or POE model file

}  // namespace poedh
