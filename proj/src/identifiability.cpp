#include "poedh/identifiability.hpp"

namespace poedh {

JointCensus census(const PoeModel& model, double eps) {
    JointCensus c;
    for (const JointSpec& js : model.joints()) {
        switch (js.effective_class(eps).kind) {
            case Motion::Helical: ++c.helical; break;
            case Motion::Rotation: ++c.revolute; break;
            case Motion::Translation: ++c.prismatic; break;
        }
    }
    return c;
}

IdentifiabilityReport counts(const JointCensus& c) {
    IdentifiabilityReport r;
    r.census = c;
    const int n = c.total();
    r.twist_params = 5 * c.helical + 4 * c.revolute + 2 * c.prismatic;
    r.scale_params = n;
    r.tool_params = 6;
    r.c1 = 6 * c.revolute + 3 * c.prismatic + 6;
    r.c2 = 4 * c.revolute + 2 * c.prismatic + 6;
    r.c3 = r.twist_params + r.scale_params + r.tool_params;
    return r;
}

}  // namespace poedh
