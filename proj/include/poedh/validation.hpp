#pragma once

// Randomized FK-equivalence experiment: sample joint configurations, evaluate
// the POE and D-H models, and record per-pose rotation/translation errors.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <random>
#include <vector>

#include "poedh/kinematics.hpp"

namespace poedh {

struct ValidationConfig {
    int samples = 100;
    std::uint64_t seed = 0;
    double q_min = -kPi;  // joint range, rad (mm for prismatic joints)
    double q_max = kPi;
};

struct ErrorRecord {
    int config_index = 0;
    double e_r = 0.0;  // rad, norm of the ZYX Euler vector of Rdh^-1 Rpoe
    double e_t = 0.0;  // mm
};

struct ValidationSummary {
    double max_e_r = 0.0, mean_e_r = 0.0;
    double max_e_t = 0.0, mean_e_t = 0.0;
};

struct ValidationResult {
    std::vector<ErrorRecord> records;
    ValidationSummary summary;

    bool within(double tol) const {
        return summary.max_e_r < tol && summary.max_e_t < tol;
    }
};

struct PoseError {
    double e_r = 0.0;
    double e_t = 0.0;
};

/// Rotation and translation error between two poses (rad, mm).
PoseError pose_errors(const Transform& h_dh, const Transform& h_poe);

// Seeded uniform sampler. The generator is pinned to std::mt19937_64 with
// 53-bit mantissa scaling so a given seed reproduces the same configuration
// sequence everywhere.
class UniformSampler {
public:
    explicit UniformSampler(std::uint64_t seed) : rng_(seed) {}

    double unit() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }
    double in_range(double lo, double hi) { return lo + (hi - lo) * unit(); }

private:
    std::mt19937_64 rng_;
};

/// Runs the experiment. Deterministic for a given seed; records come back in
/// sample order. The POE model may be in any convention.
ValidationResult validate(const PoeModel& poe, const DhModel& dh,
                          const ValidationConfig& cfg);

// CSV emission: "index,e_R_rad,e_t_mm" rows, and a two-row summary table.
void write_error_csv(const ValidationResult& result, std::ostream& out);
void write_summary_csv(const ValidationResult& result, std::ostream& out);

}  // namespace poedh
