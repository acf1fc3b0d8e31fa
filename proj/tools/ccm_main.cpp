#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ccm/builtin.hpp"
#include "ccm/dataset_io.hpp"
#include "ccm/measures.hpp"
#include "ccm/report.hpp"
#include "ccm/semantic.hpp"
#include "ccm/svg_chart.hpp"
#include "ccm/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDataError = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

double parse_probability(const std::string& text, const char* flag) {
    const auto v = ccm::parse_plain_double(text);
    if (!v) {
        throw UsageError(std::string(flag) + ": malformed number '" + text + "'");
    }
    if (!(*v >= 0.0 && *v <= 1.0)) {
        throw UsageError(std::string(flag) + ": " + text + " is outside [0,1]");
    }
    return *v;
}

double parse_signed_unit(const std::string& text, const char* flag) {
    const auto v = ccm::parse_plain_double(text);
    if (!v) {
        throw UsageError(std::string(flag) + ": malformed number '" + text + "'");
    }
    if (!(*v >= -1.0 && *v <= 1.0)) {
        throw UsageError(std::string(flag) + ": " + text + " is outside [-1,1]");
    }
    return *v;
}

std::vector<ccm::MeasureId> parse_measures(const std::string& list) {
    if (list == "all") return ccm::measure_catalog();
    std::vector<ccm::MeasureId> out;
    std::size_t start = 0;
    while (start <= list.size()) {
        const std::size_t comma = list.find(',', start);
        const std::string token =
            list.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        if (!token.empty()) {
            const auto id = ccm::measure_from_name(token);
            if (!id) throw UsageError("unknown measure '" + token + "'");
            out.push_back(*id);
        }
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (out.empty()) throw UsageError("--measures: empty list");
    return out;
}

ccm::CausalRole parse_role(const std::string& role) {
    if (role == "confounder") return ccm::CausalRole::Confounder;
    if (role == "mediator") return ccm::CausalRole::Mediator;
    throw UsageError("--role must be 'confounder' or 'mediator', got '" + role + "'");
}

ccm::ReportFormat parse_format(const std::string& format) {
    const auto f = ccm::report_format_from_name(format);
    if (!f) throw UsageError("--format must be text, csv or json, got '" + format + "'");
    return *f;
}

int run_analyze(const std::string& input, const std::string& dataset_name, const std::string& role,
                const std::string& measures, const std::string& format, bool percent,
                const std::string& chart_out) {
    if (input.empty() == dataset_name.empty()) {
        throw UsageError("analyze needs exactly one of --input or --dataset");
    }

    ccm::StratifiedDataset dataset;
    std::string name;
    if (!input.empty()) {
        dataset = ccm::load_dataset(input);
        name = std::filesystem::path(input).filename().string();
    } else {
        const auto* builtin = ccm::find_builtin(dataset_name);
        if (builtin == nullptr || !builtin->stratified) {
            throw UsageError("no stratified bundled dataset named '" + dataset_name + "'");
        }
        dataset = *builtin->stratified;
        name = dataset_name;
    }

    ccm::AnalysisOptions options;
    if (dataset.group_count() >= 2 && role.empty()) {
        throw UsageError("--role is required for datasets with 2 or more groups");
    }
    options.role = role.empty() ? ccm::CausalRole::Confounder : parse_role(role);
    if (!measures.empty()) options.measures = parse_measures(measures);
    options.percent = percent;

    const ccm::AnalysisReport report = ccm::analyze(dataset, name, options);
    std::cout << ccm::render_report(report, parse_format(format));

    if (!chart_out.empty()) {
        const ccm::GroupChart chart = ccm::emit_group_chart(dataset, report.adjusted);
        std::ofstream svg(chart_out + ".svg", std::ios::binary);
        std::ofstream csv(chart_out + ".csv", std::ios::binary);
        if (!svg || !csv) {
            throw ccm::Error(ccm::ErrorCode::ParseError,
                             "cannot write chart files at '" + chart_out + "'");
        }
        svg << chart.svg;
        csv << chart.csv;
    }
    return kExitOk;
}

int run_measures(const std::string& p11, const std::string& p10, const std::string& px1,
                 const std::string& measures, const std::string& format, bool percent) {
    const double c1 = parse_probability(p11, "--p11");
    const double c0 = parse_probability(p10, "--p10");
    std::optional<double> marginal;
    if (!px1.empty()) marginal = parse_probability(px1, "--px1");

    const ccm::JointTable table = ccm::make_joint_table(c1, c0, marginal);
    const auto results = ccm::compute_measures(table, parse_measures(measures));
    std::cout << ccm::render_measures(table, results, parse_format(format), percent);
    return kExitOk;
}

int run_predict(const std::string& cc, const std::string& ce, const std::string& px1) {
    if (cc.empty() == ce.empty()) {
        throw UsageError("predict needs exactly one of --cc or --ce");
    }
    if (!cc.empty()) {
        if (px1.empty()) throw UsageError("--cc prediction needs --px1");
        const double v = parse_signed_unit(cc, "--cc");
        const double p = parse_probability(px1, "--px1");
        if (p <= 0.0 || p >= 1.0) throw UsageError("--px1 must be inside (0,1)");
        const auto posterior = ccm::predict_from_cc(v, ccm::BinaryDistribution{p, 1.0 - p});
        std::printf("P(x1|theta1) = %.4f\nP(x0|theta1) = %.4f\n", posterior.p1, posterior.p0);
        return kExitOk;
    }
    const double v = parse_signed_unit(ce, "--ce");
    std::printf("P(y1|theta_x1) = %.4f\n", ccm::predict_from_ce(v));
    return kExitOk;
}

int run_verify(const std::string& dataset) {
    std::vector<ccm::VerifyCheck> checks;
    if (dataset.empty()) {
        checks = ccm::verify_all();
    } else {
        try {
            checks = ccm::verify_dataset(dataset);
        } catch (const ccm::Error& e) {
            if (e.code() == ccm::ErrorCode::UnknownDataset) throw UsageError(e.what());
            throw;
        }
    }

    int failures = 0;
    for (const auto& check : checks) {
        std::cout << ccm::format_check_line(check) << "\n";
        if (!check.ok()) ++failures;
    }
    std::printf("%zu checks, %d failed\n", checks.size(), failures);
    return failures == 0 ? kExitOk : kExitDataError;
}

int run_datasets() {
    for (const auto& d : ccm::builtin_datasets()) {
        std::printf("%-18s %s\n", d.name.c_str(), d.description.c_str());
        if (d.stratified) {
            std::printf("%-18s   %zu groups x 2 causes (%s schema)\n", "",
                        d.stratified->group_count(),
                        d.stratified->schema() == ccm::Schema::Counts ? "counts" : "rates");
        } else {
            for (const auto& slice : d.slices) {
                std::printf("%-18s   flat table '%s': P(y1|x1)=%s P(y1|x0)=%s\n", "",
                            slice.name.c_str(), ccm::format_full(slice.table.p_y1_given_x1).c_str(),
                            ccm::format_full(slice.table.p_y1_given_x0).c_str());
            }
        }
        std::printf("%-18s   source: %s\n", "", d.source_note.c_str());
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Causal and Bayesian confirmation measures for 2x2 outcome data"};
    app.require_subcommand(1);

    auto* analyze = app.add_subcommand("analyze", "Analyze a stratified dataset end to end");
    std::string input, dataset, role, measures, format = "text", chart_out;
    bool percent = false;
    analyze->add_option("--input", input, "CSV file (counts or rates schema)");
    analyze->add_option("--dataset", dataset, "bundled dataset name");
    analyze->add_option("--role", role, "causal role of the stratifier: confounder|mediator");
    analyze->add_option("--measures", measures, "comma-separated measure ids, or 'all'");
    analyze->add_option("--format", format, "text|csv|json");
    analyze->add_flag("--percent", percent, "display rates as percentages");
    analyze->add_option("--chart-out", chart_out, "write <base>.svg and <base>.csv group chart");

    auto* measures_cmd = app.add_subcommand("measures", "Compute measures on a flat 2x2 table");
    std::string p11, p10, px1, m_measures, m_format = "text";
    bool m_percent = false;
    measures_cmd->add_option("--p11", p11, "P(y1|x1)")->required();
    measures_cmd->add_option("--p10", p10, "P(y1|x0)")->required();
    measures_cmd->add_option("--px1", px1, "P(x1), defaults to 0.5");
    measures_cmd->add_option("--measures", m_measures, "comma-separated measure ids, or 'all'")
        ->required();
    measures_cmd->add_option("--format", m_format, "text|csv|json");
    measures_cmd->add_flag("--percent", m_percent, "display f as a percentage");

    auto* predict = app.add_subcommand("predict", "Probability predictions from Cc or Ce");
    std::string cc, ce, p_px1;
    predict->add_option("--cc", cc, "degree of causal confirmation in [-1,1]");
    predict->add_option("--ce", ce, "degree of outcome confirmation in [-1,1]");
    predict->add_option("--px1", p_px1, "cause prior P(x1) in (0,1)");

    auto* verify = app.add_subcommand("verify", "Recompute bundled reference values");
    std::string v_dataset;
    verify->add_option("--dataset", v_dataset, "restrict to one bundled dataset");

    app.add_subcommand("datasets", "List bundled datasets");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (app.got_subcommand("analyze")) {
            return run_analyze(input, dataset, role, measures, format, percent, chart_out);
        }
        if (app.got_subcommand("measures")) {
            return run_measures(p11, p10, px1, m_measures, m_format, m_percent);
        }
        if (app.got_subcommand("predict")) {
            return run_predict(cc, ce, p_px1);
        }
        if (app.got_subcommand("verify")) {
            return run_verify(v_dataset);
        }
        if (app.got_subcommand("datasets")) {
            return run_datasets();
        }
    } catch (const UsageError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitUsage;
    } catch (const ccm::Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitDataError;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitDataError;
    }
    return kExitUsage;
}
