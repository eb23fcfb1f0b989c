#pragma once

// Model files: a self-describing JSON layout with a schema tag. Twists are
// 6-element [omega, v] arrays in rad-scale / mm-scale units; D-H angles are
// stored in radians. Round-trips are lossless.

#include <string>
#include <variant>

#include "poedh/kinematics.hpp"

namespace poedh {

inline constexpr const char* kPoeSchema = "poedh/poe-model@1";
inline constexpr const char* kDhSchema = "poedh/dh-model@1";

using Model = std::variant<PoeModel, DhModel>;

// String-level API, origin names the source in diagnostics.
Model parse_model(const std::string& text, const std::string& origin);
std::string to_json(const PoeModel& model);
std::string to_json(const DhModel& model);

// File-level API. Throws ParseError / SchemaVersionError.
Model load_model(const std::string& path);
PoeModel load_poe_model(const std::string& path);
DhModel load_dh_model(const std::string& path);
void save_model(const PoeModel& model, const std::string& path);
void save_model(const DhModel& model, const std::string& path);

}  // namespace poedh
