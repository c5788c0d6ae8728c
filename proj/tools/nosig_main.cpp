#include "nosig/json_io.hpp"
#include "nosig/no_signaling.hpp"
#include "nosig/scenario.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

using nlohmann::json;

struct Options {
    double alpha = 0.0;
    double beta = 0.0;
    double gamma = 0.0;
    std::uint64_t seed = 0;
    int trials = 1000;
    double tolerance = 1e-9;
    std::string dims = "2x2";
    std::string input_path;
    std::string format = "json";
    std::optional<int> outcome;
};

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot open input file: " + path);
    json j;
    in >> j;
    return j;
}

nosig::DimensionSpec parse_dims(const std::string& text) {
    const auto x = text.find('x');
    if (x == std::string::npos)
        throw std::invalid_argument("dims must look like 2x2");
    size_t used = 0;
    const std::string left = text.substr(0, x);
    const std::string right = text.substr(x + 1);
    const int dx = std::stoi(left, &used);
    if (used != left.size())
        throw std::invalid_argument("dims must look like 2x2");
    const int dy = std::stoi(right, &used);
    if (used != right.size())
        throw std::invalid_argument("dims must look like 2x2");
    return nosig::DimensionSpec({{"X", dx}, {"Y", dy}});
}

void print_scenario_table(const nosig::ScenarioReport& report) {
    std::printf("scenario          %s\n", report.name.c_str());
    for (const auto& [k, v] : report.params)
        std::printf("%-17s %.10g\n", k.c_str(), v);
    for (const auto& [k, v] : report.probabilities)
        std::printf("%-17s %.4f\n", k.c_str(), v);
    for (const auto& [k, rho] : report.marginals) {
        std::printf("%s:\n", k.c_str());
        for (int r = 0; r < rho.matrix.rows(); ++r) {
            std::printf(" ");
            for (int c = 0; c < rho.matrix.cols(); ++c)
                std::printf(" (%+.4f%+.4fi)", rho.matrix(r, c).real(), rho.matrix(r, c).imag());
            std::printf("\n");
        }
    }
    for (const auto& [k, ok] : report.verdicts)
        std::printf("%-40s %s\n", k.c_str(), ok ? "pass" : "FAIL");
}

int emit_scenario(const nosig::ScenarioReport& report, const Options& opt) {
    if (opt.format == "table")
        print_scenario_table(report);
    else
        std::cout << nosig::scenario_report_to_json(report).dump(2) << "\n";
    return nosig::all_verdicts_pass(report) ? 0 : 1;
}

int run_fuzz(const Options& opt) {
    const nosig::DimensionSpec dims = parse_dims(opt.dims);
    const double worst = nosig::fuzz_no_signaling(opt.seed, opt.trials, dims);
    const bool pass = worst <= opt.tolerance;
    if (opt.format == "table") {
        std::printf("scenario          fuzz_no_signaling\n");
        std::printf("seed              %llu\n", static_cast<unsigned long long>(opt.seed));
        std::printf("trials            %d\n", opt.trials);
        std::printf("dims              %s\n", opt.dims.c_str());
        std::printf("worst_distance    %.3e\n", worst);
        std::printf("%-40s %s\n", "marginals_invariant", pass ? "pass" : "FAIL");
    } else {
        const json out{{"scenario", "fuzz_no_signaling"},
                       {"params",
                        {{"seed", opt.seed},
                         {"trials", opt.trials},
                         {"dims", opt.dims},
                         {"tolerance", opt.tolerance}}},
                       {"worst_distance", worst},
                       {"pass", pass}};
        std::cout << out.dump(2) << "\n";
    }
    return pass ? 0 : 1;
}

int run_classify(const Options& opt) {
    const nosig::KrausChannel ch = nosig::channel_from_json(load_json_file(opt.input_path));
    const nosig::ChannelReport report = nosig::validate_channel(ch);
    const bool deterministic = ch.kind == nosig::ChannelKind::deterministic;
    const bool valid = report.completely_positive &&
                       (deterministic ? report.trace_preserving : report.sub_normalized);
    if (opt.format == "table") {
        std::printf("kind                  %s\n", deterministic ? "deterministic" : "probabilistic");
        std::printf("trace_preserving      %s\n", report.trace_preserving ? "true" : "false");
        std::printf("sub_normalized        %s\n", report.sub_normalized ? "true" : "false");
        std::printf("completely_positive   %s\n", report.completely_positive ? "true" : "false");
        std::printf("min_choi_eigenvalue   %.3e\n", report.min_choi_eigenvalue);
        std::printf("completeness_residual %.3e\n", report.completeness_residual);
        std::printf("%-40s %s\n", "valid_for_declared_kind", valid ? "pass" : "FAIL");
    } else {
        json out = nosig::channel_report_to_json(report);
        out["kind"] = deterministic ? "deterministic" : "probabilistic";
        out["valid_for_kind"] = valid;
        std::cout << out.dump(2) << "\n";
    }
    return valid ? 0 : 1;
}

int run_erasure_cmd(const Options& opt) {
    std::vector<nosig::ComplexMatrix> basis;
    if (!opt.input_path.empty()) {
        const json j = load_json_file(opt.input_path);
        if (!j.is_array())
            throw std::invalid_argument("projector file must hold an array of matrices");
        for (const auto& m : j)
            basis.push_back(nosig::matrix_from_json(m));
    } else {
        basis = {nosig::ComplexMatrix{{1.0, 0.0}, {0.0, 0.0}},
                 nosig::ComplexMatrix{{0.0, 0.0}, {0.0, 1.0}}};
    }
    return emit_scenario(nosig::run_erasure(basis, opt.outcome), opt);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"no-signaling scenario runner and channel classifier"};
    app.require_subcommand(1);

    Options opt;
    bool outcome_set = false;
    int outcome_value = 0;

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", opt.format, "output format")
            ->check(CLI::IsMember({"json", "table"}))
            ->capture_default_str();
    };

    CLI::App* greenberger = app.add_subcommand(
        "greenberger", "interferometer scenario with the nonunitary shifter map");
    greenberger->add_option("--alpha", opt.alpha, "shifter phase before the coupling (radians)");
    greenberger->add_option("--beta", opt.beta, "shifter phase after the coupling (radians)");
    greenberger->add_option("--gamma", opt.gamma, "collapse phase (radians)");
    add_format(greenberger);

    CLI::App* epr = app.add_subcommand("epr", "spin-pair analog of the shifter map");
    epr->add_option("--gamma", opt.gamma, "collapse phase (radians)");
    add_format(epr);

    CLI::App* sg = app.add_subcommand("stern-gerlach",
                                      "branch rotation that merely relocates entanglement");
    sg->add_option("--gamma", opt.gamma, "branch rotation phase (radians)");
    add_format(sg);

    CLI::App* erasure = app.add_subcommand("erasure", "selective vs non-selective measurement");
    erasure->add_option("--outcome", outcome_value, "condition on this outcome index")
        ->each([&](const std::string&) { outcome_set = true; });
    erasure->add_option("--input", opt.input_path, "projector-set JSON file (default: z basis)");
    add_format(erasure);

    CLI::App* fuzz = app.add_subcommand("fuzz", "randomized no-signaling check");
    fuzz->add_option("--seed", opt.seed, "master seed")->capture_default_str();
    fuzz->add_option("--trials", opt.trials, "number of trials")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    fuzz->add_option("--dims", opt.dims, "bipartite dimensions, e.g. 2x3")
        ->capture_default_str();
    fuzz->add_option("--tolerance", opt.tolerance, "pass threshold")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    add_format(fuzz);

    CLI::App* classify = app.add_subcommand("classify", "validate a Kraus channel file");
    classify->add_option("--input", opt.input_path, "channel JSON file")->required();
    add_format(classify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (outcome_set)
        opt.outcome = outcome_value;

    try {
        if (greenberger->parsed())
            return emit_scenario(nosig::run_greenberger(opt.alpha, opt.beta, opt.gamma), opt);
        if (epr->parsed())
            return emit_scenario(nosig::run_epr_bohm(opt.gamma), opt);
        if (sg->parsed())
            return emit_scenario(nosig::run_stern_gerlach(opt.gamma), opt);
        if (erasure->parsed())
            return run_erasure_cmd(opt);
        if (fuzz->parsed())
            return run_fuzz(opt);
        if (classify->parsed())
            return run_classify(opt);
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
