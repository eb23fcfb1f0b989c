#include "poedh/validation.hpp"

#include <cmath>
#include <ostream>

namespace poedh {

PoseError pose_errors(const Transform& h_dh, const Transform& h_poe) {
    const Mat3 rel = h_dh.rotation().transposed() * h_poe.rotation();
    const EulerZyx ea = euler_zyx(rel);
    PoseError e;
    e.e_r = std::sqrt(ea.rz * ea.rz + ea.ry * ea.ry + ea.rx * ea.rx);
    e.e_t = (h_dh.translation() - h_poe.translation()).norm();
    return e;
}

ValidationResult validate(const PoeModel& poe, const DhModel& dh,
                          const ValidationConfig& cfg) {
    if (poe.joint_count() != dh.joint_count()) {
        throw ArityError("validate: POE model has " + std::to_string(poe.joint_count()) +
                         " joints, D-H model has " + std::to_string(dh.joint_count()));
    }
    if (cfg.samples < 1) throw Error("validate: samples must be >= 1");
    if (!(cfg.q_max > cfg.q_min)) throw Error("validate: empty joint range");

    const PoeModel base = reduce_to_base(poe);
    const std::size_t n = base.joint_count();

    // Draw every configuration up front so the sequence is a pure function of
    // the seed, independent of how evaluation is scheduled.
    UniformSampler sampler(cfg.seed);
    std::vector<std::vector<double>> configs(static_cast<std::size_t>(cfg.samples));
    for (auto& q : configs) {
        q.resize(n);
        for (double& qi : q) qi = sampler.in_range(cfg.q_min, cfg.q_max);
    }

    ValidationResult result;
    result.records.resize(configs.size());
    for (std::size_t i = 0; i < configs.size(); ++i) {
        const Transform h_poe = poe_fk(base, configs[i]);
        const Transform h_dh = dh_fk(dh, configs[i]);
        const PoseError e = pose_errors(h_dh, h_poe);
        result.records[i] = {static_cast<int>(i), e.e_r, e.e_t};
    }

    ValidationSummary& s = result.summary;
    for (const ErrorRecord& r : result.records) {
        s.max_e_r = std::max(s.max_e_r, r.e_r);
        s.max_e_t = std::max(s.max_e_t, r.e_t);
        s.mean_e_r += r.e_r;
        s.mean_e_t += r.e_t;
    }
    s.mean_e_r /= static_cast<double>(result.records.size());
    s.mean_e_t /= static_cast<double>(result.records.size());
    return result;
}

namespace {

void put(std::ostream& out, double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    out << buf;
}

}  // namespace

void write_error_csv(const ValidationResult& result, std::ostream& out) {
    out << "index,e_R_rad,e_t_mm\n";
    for (const ErrorRecord& r : result.records) {
        out << r.config_index << ',';
        put(out, r.e_r);
        out << ',';
        put(out, r.e_t);
        out << '\n';
    }
}

void write_summary_csv(const ValidationResult& result, std::ostream& out) {
    out << "metric,max,mean\n";
    out << "e_R_rad,";
    put(out, result.summary.max_e_r);
    out << ',';
    put(out, result.summary.mean_e_r);
    out << "\ne_t_mm,";
    put(out, result.summary.max_e_t);
    out << ',';
    put(out, result.summary.mean_e_t);
    out << '\n';
}

}  // namespace poedh
