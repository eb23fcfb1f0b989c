#include "poedh/model_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace poedh {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& origin, const std::string& what) {
    throw ParseError(origin + ": " + what);
}

double get_number(const json& j, const std::string& origin, const std::string& where) {
    if (!j.is_number()) fail(origin, where + ": expected a number");
    return j.get<double>();
}

double get_field(const json& obj, const std::string& origin, const std::string& where,
                 const char* key) {
    if (!obj.contains(key)) fail(origin, where + ": missing field '" + key + "'");
    return get_number(obj.at(key), origin, where + "." + key);
}

Twist parse_twist(const json& j, const std::string& origin, const std::string& where) {
    if (!j.is_array()) fail(origin, where + ": expected a 6-element array");
    if (j.size() != 6) {
        fail(origin, where + ": expected 6 elements, got " + std::to_string(j.size()));
    }
    std::array<double, 6> c{};
    for (std::size_t i = 0; i < 6; ++i) {
        c[i] = get_number(j[i], origin, where + "[" + std::to_string(i) + "]");
    }
    return Twist::from_array(c);
}

json twist_to_json(const Twist& xi) {
    const auto c = xi.to_array();
    return json(std::vector<double>(c.begin(), c.end()));
}

MotionClass parse_class(const json& j, const std::string& origin, const std::string& where) {
    if (!j.is_string()) fail(origin, where + ": expected a string");
    const std::string s = j.get<std::string>();
    if (s == "revolute") return {Motion::Rotation, 0.0};
    if (s == "prismatic") return {Motion::Translation, std::numeric_limits<double>::infinity()};
    if (s == "helical") return {Motion::Helical, 0.0};  // pitch lives in the twist
    fail(origin, where + ": unknown joint class '" + s + "'");
}

const char* class_name(const MotionClass& mc) {
    switch (mc.kind) {
        case Motion::Rotation: return "revolute";
        case Motion::Translation: return "prismatic";
        case Motion::Helical: return "helical";
    }
    return "revolute";
}

Transform parse_frame(const json& j, const std::string& origin, const std::string& where) {
    if (!j.is_array() || j.size() != 16) {
        fail(origin, where + ": expected a 16-element row-major matrix");
    }
    Mat4 m;
    for (std::size_t i = 0; i < 16; ++i) {
        m.a[i] = get_number(j[i], origin, where + "[" + std::to_string(i) + "]");
    }
    const double* bottom = m.a.data() + 12;
    if (bottom[0] != 0.0 || bottom[1] != 0.0 || bottom[2] != 0.0 || bottom[3] != 1.0) {
        fail(origin, where + ": bottom row must be 0 0 0 1");
    }
    const Transform H = Transform::from_matrix(m);
    if (!is_rotation(H.rotation(), 1e-8)) {
        fail(origin, where + ": rotation block is not orthonormal");
    }
    return H;
}

json frame_to_json(const Transform& H) {
    return json(std::vector<double>(H.matrix().a.begin(), H.matrix().a.end()));
}

PoeModel parse_poe(const json& doc, const std::string& origin) {
    if (!doc.contains("convention")) fail(origin, "missing 'convention'");
    const std::string conv = doc.at("convention").get<std::string>();

    if (!doc.contains("joints") || !doc.at("joints").is_array()) {
        fail(origin, "missing 'joints' array");
    }
    std::vector<JointSpec> joints;
    std::size_t idx = 0;
    for (const json& jj : doc.at("joints")) {
        const std::string where = "joints[" + std::to_string(idx) + "]";
        if (!jj.is_object()) fail(origin, where + ": expected an object");
        if (!jj.contains("twist")) fail(origin, where + ": missing 'twist'");
        JointSpec js;
        js.twist = parse_twist(jj.at("twist"), origin, where + ".twist");
        if (jj.contains("offset")) {
            js.offset = get_number(jj.at("offset"), origin, where + ".offset");
        }
        if (jj.contains("class")) {
            js.declared_class = parse_class(jj.at("class"), origin, where + ".class");
        }
        joints.push_back(js);
        ++idx;
    }

    std::string name;
    if (doc.contains("name")) name = doc.at("name").get<std::string>();

    try {
        if (conv == "base" || conv == "tool") {
            if (!doc.contains("tool_twist")) fail(origin, "missing 'tool_twist'");
            const Twist xiT = parse_twist(doc.at("tool_twist"), origin, "tool_twist");
            return conv == "base" ? PoeModel::base(std::move(joints), xiT, name)
                                  : PoeModel::tool(std::move(joints), xiT, name);
        }
        if (conv == "local") {
            if (!doc.contains("local_frames") || !doc.at("local_frames").is_array()) {
                fail(origin, "missing 'local_frames' array");
            }
            std::vector<Transform> frames;
            std::size_t fi = 0;
            for (const json& fj : doc.at("local_frames")) {
                frames.push_back(
                    parse_frame(fj, origin, "local_frames[" + std::to_string(fi) + "]"));
                ++fi;
            }
            return PoeModel::local(std::move(joints), std::move(frames), name);
        }
    } catch (const ZeroTwistError& e) {
        fail(origin, e.what());
    } catch (const FrameCountError& e) {
        fail(origin, e.what());
    }
    fail(origin, "unknown convention '" + conv + "'");
}

DhModel parse_dh(const json& doc, const std::string& origin) {
    DhModel m;
    if (doc.contains("name")) m.name = doc.at("name").get<std::string>();

    if (!doc.contains("base") || !doc.at("base").is_object()) {
        fail(origin, "missing 'base' row");
    }
    const json& b = doc.at("base");
    m.base = {get_field(b, origin, "base", "theta"), get_field(b, origin, "base", "d"),
              get_field(b, origin, "base", "alpha"), get_field(b, origin, "base", "a")};

    if (!doc.contains("rows") || !doc.at("rows").is_array()) {
        fail(origin, "missing 'rows' array");
    }
    std::size_t idx = 0;
    for (const json& rj : doc.at("rows")) {
        const std::string where = "rows[" + std::to_string(idx) + "]";
        if (!rj.is_object()) fail(origin, where + ": expected an object");
        DhRow row;
        row.theta = get_field(rj, origin, where, "theta");
        row.d = get_field(rj, origin, where, "d");
        row.alpha = get_field(rj, origin, where, "alpha");
        row.a = get_field(rj, origin, where, "a");
        const double j = get_field(rj, origin, where, "j");
        if (j != 0.0 && j != 1.0) fail(origin, where + ".j: must be 0 or 1");
        row.j = static_cast<int>(j);
        row.k = get_field(rj, origin, where, "k");
        if (row.j == 0 && row.k != 1.0) {
            fail(origin, where + ": prismatic rows require k = 1");
        }
        if (rj.contains("qbar")) {
            row.qbar = get_number(rj.at("qbar"), origin, where + ".qbar");
            if (!(row.qbar > 0.0)) fail(origin, where + ".qbar: must be positive");
        }
        if (rj.contains("offset_merged")) {
            if (!rj.at("offset_merged").is_boolean()) {
                fail(origin, where + ".offset_merged: expected a boolean");
            }
            row.offset_merged = rj.at("offset_merged").get<bool>();
        }
        m.rows.push_back(row);
        ++idx;
    }

    if (!doc.contains("tool") || !doc.at("tool").is_object()) {
        fail(origin, "missing 'tool' row");
    }
    const json& t = doc.at("tool");
    m.tool = {get_field(t, origin, "tool", "theta"), get_field(t, origin, "tool", "d")};
    return m;
}

json poe_to_json_doc(const PoeModel& model) {
    json doc;
    doc["schema"] = kPoeSchema;
    if (!model.name().empty()) doc["name"] = model.name();
    switch (model.convention()) {
        case Convention::Base: doc["convention"] = "base"; break;
        case Convention::Tool: doc["convention"] = "tool"; break;
        case Convention::Local: doc["convention"] = "local"; break;
    }
    json joints = json::array();
    for (const JointSpec& js : model.joints()) {
        json jj;
        jj["twist"] = twist_to_json(js.twist);
        jj["offset"] = js.offset;
        if (js.declared_class) jj["class"] = class_name(*js.declared_class);
        joints.push_back(jj);
    }
    doc["joints"] = joints;
    if (model.convention() == Convention::Local) {
        json frames = json::array();
        for (const Transform& H : model.local_frames()) frames.push_back(frame_to_json(H));
        doc["local_frames"] = frames;
    } else {
        doc["tool_twist"] = twist_to_json(model.tool_twist());
    }
    return doc;
}

json dh_to_json_doc(const DhModel& model) {
    json doc;
    doc["schema"] = kDhSchema;
    if (!model.name.empty()) doc["name"] = model.name;
    doc["base"] = {{"theta", model.base.theta},
                   {"d", model.base.d},
                   {"alpha", model.base.alpha},
                   {"a", model.base.a}};
    json rows = json::array();
    for (const DhRow& row : model.rows) {
        rows.push_back({{"theta", row.theta},
                        {"d", row.d},
                        {"alpha", row.alpha},
                        {"a", row.a},
                        {"j", row.j},
                        {"k", row.k},
                        {"qbar", row.qbar},
                        {"offset_merged", row.offset_merged}});
    }
    doc["rows"] = rows;
    doc["tool"] = {{"theta", model.tool.theta}, {"d", model.tool.d}};
    return doc;
}

}  // namespace

Model parse_model(const std::string& text, const std::string& origin) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(origin + ": " + e.what());
    }
    if (!doc.is_object()) throw ParseError(origin + ": expected a JSON object");
    if (!doc.contains("schema") || !doc.at("schema").is_string()) {
        throw SchemaVersionError(origin + ": missing 'schema' field");
    }
    const std::string schema = doc.at("schema").get<std::string>();
    try {
        if (schema == kPoeSchema) return parse_poe(doc, origin);
        if (schema == kDhSchema) return parse_dh(doc, origin);
    } catch (const json::exception& e) {
        throw ParseError(origin + ": " + e.what());
    }
    throw SchemaVersionError(origin + ": unsupported schema '" + schema + "' (expected " +
                             kPoeSchema + " or " + kDhSchema + ")");
}

std::string to_json(const PoeModel& model) { return poe_to_json_doc(model).dump(2) + "\n"; }

std::string to_json(const DhModel& model) { return dh_to_json_doc(model).dump(2) + "\n"; }

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path + ": cannot open file");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw Error(path + ": cannot open file for writing");
    out << text;
    if (!out) throw Error(path + ": write failed");
}

}  // namespace

Model load_model(const std::string& path) { return parse_model(read_file(path), path); }

PoeModel load_poe_model(const std::string& path) {
    Model m = load_model(path);
    if (auto* poe = std::get_if<PoeModel>(&m)) return *poe;
    throw ParseError(path + ": expected a POE model, found a D-H model");
}

DhModel load_dh_model(const std::string& path) {
    Model m = load_model(path);
    if (auto* dh = std::get_if<DhModel>(&m)) return *dh;
    throw ParseError(path + ": expected a D-H model, found a POE model");
}

void save_model(const PoeModel& model, const std::string& path) {
    write_file(path, to_json(model));
}

void save_model(const DhModel& model, const std::string& path) {
    write_file(path, to_json(model));
}

}  // namespace poedh
