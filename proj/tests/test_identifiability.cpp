#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "oracles.hpp"
#include "poedh/fixtures.hpp"
#include "poedh/identifiability.hpp"

using namespace poedh;

TEST_CASE("census of the PUMA fixtures") {
    const JointCensus nominal = census(fixture("puma560_nominal"));
    CHECK(nominal.helical == 0);
    CHECK(nominal.revolute == 6);
    CHECK(nominal.prismatic == 0);
    CHECK(nominal.total() == 6);

    const PoeModel empty = PoeModel::base({}, Twist{});
    const JointCensus none = census(empty);
    CHECK(none.total() == 0);

    // The calibrated set picks up helical patterns; the census must agree
    // with per-joint classification.
    const PoeModel actual = fixture("puma560_actual");
    const JointCensus c = census(actual, 1e-8);
    JointCensus ref;
    for (const JointSpec& js : actual.joints()) {
        switch (classify(js.twist, 1e-8).kind) {
            case Motion::Helical: ++ref.helical; break;
            case Motion::Rotation: ++ref.revolute; break;
            case Motion::Translation: ++ref.prismatic; break;
        }
    }
    CHECK(c.helical == ref.helical);
    CHECK(c.revolute == ref.revolute);
    CHECK(c.prismatic == ref.prismatic);
    CHECK(c.total() == 6);
    CHECK(c.helical > 0);
}

TEST_CASE("declared classes override numeric classification") {
    PoeModel actual = fixture("puma560_actual");
    std::vector<JointSpec> joints = actual.joints();
    for (JointSpec& js : joints) js.declared_class = MotionClass{Motion::Rotation, 0.0};
    const PoeModel declared = PoeModel::base(std::move(joints), actual.tool_twist());
    const JointCensus c = census(declared);
    CHECK(c.revolute == 6);
    CHECK(c.helical == 0);
}

TEST_CASE("counts reproduce the closed forms") {
    const IdentifiabilityReport six_r = counts({0, 6, 0});
    CHECK(six_r.c1 == 42);
    CHECK(six_r.c2 == 30);
    CHECK(six_r.c3 == 36);
    CHECK(six_r.twist_params == 24);
    CHECK(six_r.scale_params == 6);
    CHECK(six_r.tool_params == 6);

    const IdentifiabilityReport none = counts({0, 0, 0});
    CHECK(none.c1 == 6);
    CHECK(none.c2 == 6);
    CHECK(none.c3 == 6);

    const IdentifiabilityReport mixed = counts({1, 1, 1});
    CHECK(mixed.c3 == 5 + 4 + 2 + 3 + 6);
}

TEST_CASE("count identities") {
    testo::Rng rng(71);
    for (int it = 0; it < 1000; ++it) {
        JointCensus c;
        c.revolute = static_cast<int>(rng.uniform(0, 13));
        c.prismatic = static_cast<int>(rng.uniform(0, 13));
        const IdentifiabilityReport r = counts(c);
        // No helical joints: c3 exceeds c2 by exactly the n scale factors.
        CHECK(r.c3 == r.c2 + c.total());
    }
    for (int n = 0; n <= 12; ++n) {
        // Every joint helical matches the all-revolute c1 with scales folded in.
        const IdentifiabilityReport all_h = counts({n, 0, 0});
        JointCensus as_revolute{0, n, 0};
        CHECK(all_h.c3 == 6 * n + 6);
        CHECK(all_h.c3 == counts(as_revolute).c1);
    }
}

TEST_CASE("census is invariant under joint order") {
    const PoeModel actual = fixture("puma560_actual");
    std::vector<JointSpec> joints = actual.joints();
    std::reverse(joints.begin(), joints.end());
    const PoeModel reversed = PoeModel::base(std::move(joints), actual.tool_twist());
    const JointCensus a = census(actual);
    const JointCensus b = census(reversed);
    CHECK(a.helical == b.helical);
    CHECK(a.revolute == b.revolute);
    CHECK(a.prismatic == b.prismatic);
}
