#include "poedh/report.hpp"

#include <iomanip>
#include <sstream>

namespace poedh {

namespace {

std::string row_label(std::size_t i, std::size_t n) {
    // B H0, 0 H1, ..., n-1 Hn, n HT
    if (i == 0) return "BH0";
    std::ostringstream ss;
    ss << (i - 1) << 'H';
    if (i == n + 1) {
        ss << 'T';
    } else {
        ss << i;
    }
    return ss.str();
}

void cell(std::ostream& out, double v) {
    out << std::setw(12) << std::fixed << std::setprecision(4) << v;
}

void blank(std::ostream& out) { out << std::setw(12) << "-"; }

}  // namespace

std::string format_dh_report(const DhModel& model) {
    std::ostringstream out;
    const std::size_t n = model.joint_count();
    out << "D-H parameterization";
    if (!model.name.empty()) out << " of " << model.name;
    out << " (" << n << " joints)\n";
    out << std::setw(6) << "row" << std::setw(12) << "theta(deg)" << std::setw(12)
        << "d(mm)" << std::setw(12) << "alpha(deg)" << std::setw(12) << "a(mm)"
        << std::setw(12) << "h(mm/deg)" << std::setw(14) << "qbar" << '\n';

    out << std::setw(6) << row_label(0, n);
    cell(out, deg(model.base.theta));
    cell(out, model.base.d);
    cell(out, deg(model.base.alpha));
    cell(out, model.base.a);
    blank(out);
    out << std::setw(14) << "-" << '\n';

    for (std::size_t i = 0; i < n; ++i) {
        const DhRow& row = model.rows[i];
        out << std::setw(6) << row_label(i + 1, n);
        cell(out, deg(row.theta));
        cell(out, row.d);
        cell(out, deg(row.alpha));
        cell(out, row.a);
        if (row.j == 1) {
            // Pitch column mirrors the joint screw: k mm/rad shown as mm/deg.
            cell(out, row.k * kPi / 180.0);
        } else {
            blank(out);
        }
        out << std::setw(14) << std::fixed << std::setprecision(7) << row.qbar;
        if (row.offset_merged) out << "  [offset merged]";
        out << '\n';
    }

    out << std::setw(6) << row_label(n + 1, n);
    cell(out, deg(model.tool.theta));
    cell(out, model.tool.d);
    blank(out);
    blank(out);
    blank(out);
    out << std::setw(14) << "-" << '\n';
    return out.str();
}

std::string format_identifiability(const IdentifiabilityReport& r) {
    std::ostringstream out;
    const JointCensus& c = r.census;
    out << "joints: " << c.total() << " (helical " << c.helical << ", revolute "
        << c.revolute << ", prismatic " << c.prismatic << ")\n";
    out << "C1 = 6r + 3t + 6          = " << r.c1 << '\n';
    out << "C2 = 4r + 2t + 6          = " << r.c2 << '\n';
    out << "C3 = 5h + 4r + 2t + n + 6 = " << r.c3 << '\n';
    out << "  twist parameters  5h+4r+2t = " << r.twist_params << '\n';
    out << "  scale factors            n = " << r.scale_params << '\n';
    out << "  tool frame                 = " << r.tool_params << '\n';
    out << "note: of the 6 tool-frame parameters, four sit in the base-to-first-joint\n"
           "transform and two in the last-joint-to-tool transform; they are not freely\n"
           "assignable as a full rigid placement.\n";
    return out.str();
}

std::string format_transform(const Transform& H) {
    std::ostringstream out;
    const Mat4& m = H.matrix();
    for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 4; ++c) {
            out << std::setw(22) << std::setprecision(15) << std::defaultfloat << m(r, c);
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace poedh
