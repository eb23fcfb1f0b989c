#include "poedh/fixtures.hpp"

#include "poedh/model_io.hpp"

namespace poedh {

namespace {

PoeModel puma560_nominal() {
    std::vector<JointSpec> joints(6);
    joints[0].twist = Twist::from_array({0, 0, 1, 0, 0, 0});
    joints[1].twist = Twist::from_array({0, -1, 0, 0, 0, 0});
    joints[2].twist = Twist::from_array({0, -1, 0, 0, 0, -100});
    joints[3].twist = Twist::from_array({0, 0, -1, -50, 250, 0});
    joints[4].twist = Twist::from_array({0, -1, 0, -20, 0, -250});
    joints[5].twist = Twist::from_array({0, 0, -1, -50, 250, 0});
    const Twist tool = Twist::from_array({0, 0, 0, 250, 50, -20});
    return PoeModel::base(std::move(joints), tool, "puma560_nominal");
}

// Published calibrated twist set; left unnormalized on purpose.
PoeModel puma560_actual() {
    std::vector<JointSpec> joints(6);
    joints[0].twist = Twist::from_array({0.04, -0.02, 0.999, 0.02, 0.04, 0});
    joints[1].twist = Twist::from_array({0, -1.00002, 0, -0.02, 0, 0.05});
    joints[2].twist = Twist::from_array({0.178, -0.984, -0.001, -0.07, 0.009, -101});
    joints[3].twist = Twist::from_array({0.062, 0.013, -0.998, -51, 249, 0.0752});
    joints[4].twist = Twist::from_array({0.001, -1.00004, 0, -20.6, -0.0206, -249});
    joints[5].twist = Twist::from_array({0.095, 0.031, -0.995, -51, 249, 0});
    const Twist tool = Twist::from_array({0.02, -0.01, 0.01, 249, 51, -20.6});
    return PoeModel::base(std::move(joints), tool, "puma560_actual");
}

constexpr const char* kFixturePrefix = "fixture:";

}  // namespace

std::vector<std::string> fixture_names() {
    return {"puma560_nominal", "puma560_actual"};
}

PoeModel fixture(const std::string& name) {
    if (name == "puma560_nominal") return puma560_nominal();
    if (name == "puma560_actual") return puma560_actual();
    throw ParseError("unknown fixture '" + name + "' (see the fixtures command)");
}

bool is_fixture_ref(const std::string& ref) {
    return ref.rfind(kFixturePrefix, 0) == 0;
}

PoeModel load_poe(const std::string& ref) {
    if (is_fixture_ref(ref)) {
        return fixture(ref.substr(std::string(kFixturePrefix).size()));
    }
    return load_poe_model(ref);
}

}  // namespace poedh
