// poedh: serial-robot kinematics toolkit.
//
//   convert   POE model -> D-H model, Table-style report
//   fk        forward kinematics of a POE or D-H model file
//   validate  randomized FK-equivalence experiment between the two models
//   identify  joint census and identifiable-parameter counts
//   fixtures  list embedded models (usable as fixture:NAME)
//
// Exit codes: 0 success, 2 parse/schema error, 3 validation tolerance
// exceeded, 1 anything else.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "poedh/conversion.hpp"
#include "poedh/fixtures.hpp"
#include "poedh/identifiability.hpp"
#include "poedh/kernels.hpp"
#include "poedh/model_io.hpp"
#include "poedh/report.hpp"
#include "poedh/validation.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitParse = 2;
constexpr int kExitTolerance = 3;

poedh::Model resolve_model(const std::string& ref) {
    if (poedh::is_fixture_ref(ref)) return poedh::load_poe(ref);
    return poedh::load_model(ref);
}

int run_convert(const std::string& in, const std::optional<std::string>& out_path,
                double eps) {
    const poedh::PoeModel poe = poedh::load_poe(in);
    const poedh::DhModel dh = poedh::poe_to_dh(poe, eps);
    std::cout << poedh::format_dh_report(dh);
    if (out_path) {
        poedh::save_model(dh, *out_path);
        std::cout << "wrote " << *out_path << "\n";
    }
    return kExitOk;
}

int run_fk(const std::string& in, const std::vector<double>& q) {
    const poedh::Model model = resolve_model(in);
    poedh::Transform H;
    if (const auto* poe = std::get_if<poedh::PoeModel>(&model)) {
        H = poedh::poe_fk(poedh::reduce_to_base(*poe), q);
    } else {
        H = poedh::dh_fk(std::get<poedh::DhModel>(model), q);
    }
    std::cout << poedh::format_transform(H);
    return kExitOk;
}

int run_validate(const std::string& poe_in, const std::optional<std::string>& dh_in,
                 const poedh::ValidationConfig& cfg, double eps,
                 const std::optional<std::string>& csv,
                 const std::optional<std::string>& summary_csv,
                 const std::optional<double>& tolerance) {
    const poedh::PoeModel poe = poedh::load_poe(poe_in);
    const poedh::DhModel dh =
        dh_in ? poedh::load_dh_model(*dh_in) : poedh::poe_to_dh(poe, eps);

    const poedh::ValidationResult result = poedh::validate(poe, dh, cfg);
    if (csv) {
        std::ofstream f(*csv);
        if (!f) throw poedh::Error(*csv + ": cannot open for writing");
        poedh::write_error_csv(result, f);
    }
    if (summary_csv) {
        std::ofstream f(*summary_csv);
        if (!f) throw poedh::Error(*summary_csv + ": cannot open for writing");
        poedh::write_summary_csv(result, f);
    }

    const auto& s = result.summary;
    std::cout << "samples: " << result.records.size() << "  seed: " << cfg.seed << "\n";
    std::cout << "e_R (rad): max " << s.max_e_r << "  mean " << s.mean_e_r << "\n";
    std::cout << "e_t (mm):  max " << s.max_e_t << "  mean " << s.mean_e_t << "\n";
    if (tolerance && !result.within(*tolerance)) {
        std::cout << "tolerance " << *tolerance << " exceeded\n";
        return kExitTolerance;
    }
    return kExitOk;
}

int run_identify(const std::string& in, double eps) {
    const poedh::Model model = resolve_model(in);
    poedh::PoeModel poe = model.index() == 0
                              ? std::get<poedh::PoeModel>(model)
                              : poedh::dh_to_poe(std::get<poedh::DhModel>(model));
    const poedh::IdentifiabilityReport report = poedh::counts(poedh::census(poe, eps));
    std::cout << poedh::format_identifiability(report);
    return kExitOk;
}

int run_fixtures() {
    for (const std::string& name : poedh::fixture_names()) {
        const poedh::PoeModel m = poedh::fixture(name);
        std::cout << "fixture:" << name << "  (" << m.joint_count()
                  << "-joint POE, base convention)\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Serial-robot kinematics: product-of-exponentials and D-H models"};
    app.require_subcommand(1);

    std::string model_in;
    std::optional<std::string> out_path;
    double eps = poedh::kClassifyEps;

    auto* conv = app.add_subcommand("convert", "Convert a POE model to a D-H model");
    conv->add_option("model", model_in, "POE model file or fixture:NAME")->required();
    conv->add_option("--out", out_path, "write the D-H model here");
    conv->add_option("--eps", eps, "joint classification threshold");

    std::vector<double> q_values;
    auto* fk = app.add_subcommand("fk", "Forward kinematics of a model file");
    fk->add_option("model", model_in, "model file or fixture:NAME")->required();
    fk->add_option("--q", q_values, "joint values, comma separated (rad; mm prismatic)")
        ->required()
        ->delimiter(',');

    poedh::ValidationConfig cfg;
    std::optional<std::string> dh_in, csv_path, summary_csv_path;
    std::optional<double> tolerance;
    auto* val = app.add_subcommand("validate", "FK-equivalence experiment POE vs D-H");
    val->add_option("model", model_in, "POE model file or fixture:NAME")->required();
    val->add_option("--dh", dh_in, "D-H model file (converted on the fly if absent)");
    val->add_option("--samples", cfg.samples, "number of configurations");
    val->add_option("--seed", cfg.seed, "RNG seed");
    val->add_option("--csv", csv_path, "write per-sample errors here");
    val->add_option("--summary-csv", summary_csv_path, "write the summary here");
    val->add_option("--tolerance", tolerance, "exit 3 if any max error exceeds this");
    val->add_option("--eps", eps, "joint classification threshold");

    auto* ident = app.add_subcommand("identify", "Identifiable-parameter counts");
    ident->add_option("model", model_in, "model file or fixture:NAME")->required();
    ident->add_option("--eps", eps, "joint classification threshold");

    app.add_subcommand("fixtures", "List embedded models");

    CLI11_PARSE(app, argc, argv);

    try {
        if (conv->parsed()) return run_convert(model_in, out_path, eps);
        if (fk->parsed()) return run_fk(model_in, q_values);
        if (val->parsed())
            return run_validate(model_in, dh_in, cfg, eps, csv_path, summary_csv_path,
                                tolerance);
        if (ident->parsed()) return run_identify(model_in, eps);
        return run_fixtures();
    } catch (const poedh::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const poedh::SchemaVersionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
}
