#include "ccm/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include <json.hpp>

#include "ccm/dataset_io.hpp"

namespace ccm {

namespace {

using ordered_json = nlohmann::ordered_json;

// Four significant digits, trailing zeros kept ("0.7800").
std::string fmt4(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%#.4g", v);
    std::string s = buf;
    // %#.4g may leave a bare trailing '.' on integral values.
    if (!s.empty() && s.back() == '.') s.pop_back();
    return s;
}

std::string fmt_rate(double v, bool percent) {
    return percent ? fmt4(v * 100.0) + "%" : fmt4(v);
}

std::string pad(std::string s, std::size_t width) {
    if (s.size() < width) s.append(width - s.size(), ' ');
    return s;
}

std::string direction_label(int sign, const std::string& focus, const std::string& reference) {
    if (sign > 0) return focus;
    if (sign < 0) return reference;
    return "tie";
}

ordered_json measure_json(const MeasureResult& r) {
    ordered_json j;
    j["id"] = std::string(measure_name(r.id));
    if (std::isinf(r.value)) {
        j["value"] = r.value > 0 ? "inf" : "-inf";
    } else {
        j["value"] = r.value;
    }
    j["direction"] = r.direction;
    j["defined"] = r.defined;
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

std::string csv_value(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    return format_full(v);
}

std::string render_text(const AnalysisReport& r) {
    const auto& ds = r.dataset;
    const std::string& ref = ds.reference_cause();
    const std::string& focus = ds.focus_cause();
    const std::string& y1 = ds.outcome_label();
    const bool pct = r.percent;

    std::string out;
    out += "dataset: " + r.dataset_name + "\n";
    out += "schema: " + std::string(ds.schema() == Schema::Counts ? "counts" : "rates") + "\n";
    out += "causes: " + ref + " (reference), " + focus + "\n";
    out += "outcome: " + y1 + "\n";
    out += "role: " + std::string(causal_role_name(r.adjusted.role_used)) + "\n\n";

    std::size_t gw = 5;
    for (const auto& g : ds.groups()) gw = std::max(gw, g.label.size());
    std::size_t cw = std::max({std::size_t(5), ref.size(), focus.size()});

    out += pad("group", gw + 2) + pad("cause", cw + 2) + pad("rate", 9) + "weight\n";
    for (std::size_t gi = 0; gi < ds.group_count(); ++gi) {
        for (std::size_t ci = 0; ci < 2; ++ci) {
            out += pad(ds.groups()[gi].label, gw + 2) + pad(ds.causes()[ci], cw + 2) +
                   pad(fmt_rate(ds.rate(gi, ci), pct), 9) + fmt4(ds.weight_given_cause(gi, ci)) +
                   "\n";
        }
    }
    out += "\n";

    const std::size_t name_w = y1.size() + 12;
    out += pad("", name_w + 2) + pad(ref, 9) + focus + "\n";
    out += pad("P(" + y1 + "|x)", name_w + 2) + pad(fmt_rate(r.observed.p_y1_given_x0, pct), 9) +
           fmt_rate(r.observed.p_y1_given_x1, pct) + "\n";
    out += pad("P(" + y1 + "|do(x))", name_w + 2) + pad(fmt_rate(r.adjusted.p_y1_do_x0, pct), 9) +
           fmt_rate(r.adjusted.p_y1_do_x1, pct) + "\n";
    const DoTable comp = r.adjusted.complement();
    out += pad("P(" + comp.label_y1 + "|do(x))", name_w + 2) +
           pad(fmt_rate(comp.p_y1_do_x1, pct), 9) + fmt_rate(comp.p_y1_do_x0, pct) + "\n\n";

    out += "paradox: " + std::string(r.paradox.paradox_present ? "present" : "absent") + "\n";
    out += "  per-group direction:";
    for (const auto& [g, s] : r.paradox.group_direction) {
        out += " " + g + ":" + direction_label(s, focus, ref);
    }
    out += "\n";
    out += "  pooled favors: " + direction_label(r.paradox.overall_direction, focus, ref) +
           ", adjusted favors: " + direction_label(r.paradox.adjusted_direction, focus, ref) +
           "\n";

    if (!r.measures_observed.empty()) {
        out += "\n" + pad("measure", 12) + pad("observed", 11) + pad("adjusted", 11) +
               "direction\n";
        for (std::size_t i = 0; i < r.measures_observed.size(); ++i) {
            const auto& obs = r.measures_observed[i];
            const auto& adj = r.measures_adjusted[i];
            out += pad(std::string(measure_name(obs.id)), 12) +
                   pad(obs.defined ? fmt4(obs.value) : "undef", 11) +
                   pad(adj.defined ? fmt4(adj.value) : "undef", 11) + adj.direction + "\n";
        }
        if (r.cc_complement_adjusted) {
            const auto& c = *r.cc_complement_adjusted;
            out += pad("cc0", 12) + pad("", 11) + pad(c.defined ? fmt4(c.value) : "undef", 11) +
                   c.direction + "\n";
        }
    }
    return out;
}

std::string render_csv(const AnalysisReport& r) {
    const auto& ds = r.dataset;
    std::string out = "section,scope,cause,field,value\n";
    auto row = [&out](const std::string& section, const std::string& scope,
                      const std::string& cause, const std::string& field,
                      const std::string& value) {
        out += section + "," + scope + "," + cause + "," + field + "," + value + "\n";
    };

    row("dataset", "", "", "name", r.dataset_name);
    row("dataset", "", "", "schema", ds.schema() == Schema::Counts ? "counts" : "rates");
    row("dataset", "", "", "reference_cause", ds.reference_cause());
    row("dataset", "", "", "focus_cause", ds.focus_cause());
    row("dataset", "", "", "outcome", ds.outcome_label());
    row("dataset", "", "", "role", causal_role_name(r.adjusted.role_used));

    for (std::size_t gi = 0; gi < ds.group_count(); ++gi) {
        for (std::size_t ci = 0; ci < 2; ++ci) {
            row("groups", ds.groups()[gi].label, ds.causes()[ci], "rate",
                csv_value(ds.rate(gi, ci)));
            row("groups", ds.groups()[gi].label, ds.causes()[ci], "weight",
                csv_value(ds.weight_given_cause(gi, ci)));
        }
    }

    row("observed", "", ds.reference_cause(), "p_y1", csv_value(r.observed.p_y1_given_x0));
    row("observed", "", ds.focus_cause(), "p_y1", csv_value(r.observed.p_y1_given_x1));
    row("observed", "", ds.focus_cause(), "cause_marginal", csv_value(r.observed.p_x1()));
    row("adjusted", "", ds.reference_cause(), "p_y1_do", csv_value(r.adjusted.p_y1_do_x0));
    row("adjusted", "", ds.focus_cause(), "p_y1_do", csv_value(r.adjusted.p_y1_do_x1));
    for (const auto& [g, w] : r.adjusted.weights_used) {
        row("adjusted", g, "", "weight_used", csv_value(w));
    }

    row("paradox", "", "", "unanimous", r.paradox.unanimous ? "true" : "false");
    row("paradox", "", "", "paradox_present", r.paradox.paradox_present ? "true" : "false");
    row("paradox", "", "", "overall_direction", std::to_string(r.paradox.overall_direction));
    row("paradox", "", "", "adjusted_direction", std::to_string(r.paradox.adjusted_direction));
    for (const auto& [g, s] : r.paradox.group_direction) {
        row("paradox", g, "", "group_direction", std::to_string(s));
    }

    for (std::size_t i = 0; i < r.measures_observed.size(); ++i) {
        const auto& obs = r.measures_observed[i];
        const auto& adj = r.measures_adjusted[i];
        row("measures", "observed", "", std::string(measure_name(obs.id)),
            obs.defined ? csv_value(obs.value) : "undefined");
        row("measures", "adjusted", "", std::string(measure_name(adj.id)),
            adj.defined ? csv_value(adj.value) : "undefined");
    }
    if (r.cc_complement_adjusted) {
        const auto& c = *r.cc_complement_adjusted;
        row("measures", "adjusted", "", "cc0", c.defined ? csv_value(c.value) : "undefined");
    }
    return out;
}

std::string render_json(const AnalysisReport& r) {
    const auto& ds = r.dataset;
    ordered_json j;
    j["dataset"] = {
        {"name", r.dataset_name},
        {"schema", ds.schema() == Schema::Counts ? "counts" : "rates"},
        {"reference_cause", ds.reference_cause()},
        {"focus_cause", ds.focus_cause()},
        {"outcome", ds.outcome_label()},
    };

    ordered_json observed;
    observed["p_y1_given_x"][ds.reference_cause()] = r.observed.p_y1_given_x0;
    observed["p_y1_given_x"][ds.focus_cause()] = r.observed.p_y1_given_x1;
    observed["cause_marginal"][ds.reference_cause()] = 1.0 - r.observed.p_x1();
    observed["cause_marginal"][ds.focus_cause()] = r.observed.p_x1();
    j["observed"] = observed;

    ordered_json adjusted;
    adjusted["role"] = causal_role_name(r.adjusted.role_used);
    adjusted["p_y1_do_x"][ds.reference_cause()] = r.adjusted.p_y1_do_x0;
    adjusted["p_y1_do_x"][ds.focus_cause()] = r.adjusted.p_y1_do_x1;
    for (const auto& [g, w] : r.adjusted.weights_used) {
        adjusted["weights_used"][g] = w;
    }
    j["adjusted"] = adjusted;

    ordered_json paradox;
    paradox["unanimous"] = r.paradox.unanimous;
    paradox["paradox_present"] = r.paradox.paradox_present;
    paradox["overall_direction"] = r.paradox.overall_direction;
    paradox["adjusted_direction"] = r.paradox.adjusted_direction;
    for (const auto& [g, s] : r.paradox.group_direction) {
        paradox["group_direction"][g] = s;
    }
    j["paradox"] = paradox;

    ordered_json measures;
    measures["observed"] = ordered_json::object();
    measures["adjusted"] = ordered_json::object();
    for (const auto& m : r.measures_observed) {
        measures["observed"][std::string(measure_name(m.id))] = measure_json(m);
    }
    for (const auto& m : r.measures_adjusted) {
        measures["adjusted"][std::string(measure_name(m.id))] = measure_json(m);
    }
    if (r.cc_complement_adjusted) {
        measures["adjusted"]["cc0"] = measure_json(*r.cc_complement_adjusted);
    }
    j["measures"] = measures;

    ordered_json groups = ordered_json::array();
    for (std::size_t gi = 0; gi < ds.group_count(); ++gi) {
        for (std::size_t ci = 0; ci < 2; ++ci) {
            groups.push_back({
                {"group", ds.groups()[gi].label},
                {"cause", ds.causes()[ci]},
                {"rate", ds.rate(gi, ci)},
                {"weight", ds.weight_given_cause(gi, ci)},
            });
        }
    }
    j["groups"] = groups;
    return j.dump(2) + "\n";
}

}  // namespace

std::optional<ReportFormat> report_format_from_name(std::string_view name) {
    if (name == "text") return ReportFormat::Text;
    if (name == "csv") return ReportFormat::Csv;
    if (name == "json") return ReportFormat::Json;
    return std::nullopt;
}

AnalysisReport analyze(const StratifiedDataset& dataset, std::string dataset_name,
                       const AnalysisOptions& options) {
    AnalysisReport report;
    report.dataset_name = std::move(dataset_name);
    report.dataset = dataset;
    report.percent = options.percent;
    report.observed = pool(dataset);
    report.adjusted = do_adjust(dataset, options.role);
    report.paradox = detect_simpson(dataset);

    const JointTable adjusted_joint = to_joint(report.adjusted, report.observed.p_x1());
    report.measures_observed = compute_measures(report.observed, options.measures);
    report.measures_adjusted = compute_measures(adjusted_joint, options.measures);

    const bool wants_cc = std::any_of(options.measures.begin(), options.measures.end(),
                                      [](MeasureId id) { return id == MeasureId::Cc; });
    if (wants_cc) {
        report.cc_complement_adjusted = causal_confirmation_cc(
            to_joint(report.adjusted.complement(), 1.0 - report.observed.p_x1()));
    }
    return report;
}

std::string render_report(const AnalysisReport& report, ReportFormat format) {
    switch (format) {
        case ReportFormat::Text: return render_text(report);
        case ReportFormat::Csv: return render_csv(report);
        case ReportFormat::Json: return render_json(report);
    }
    return {};
}

std::string render_measures(const JointTable& table, const std::vector<MeasureResult>& results,
                            ReportFormat format, bool percent) {
    if (format == ReportFormat::Json) {
        ordered_json j;
        j["table"] = {
            {"p_y1_given_x1", table.p_y1_given_x1},
            {"p_y1_given_x0", table.p_y1_given_x0},
            {"p_x1", table.p_x1()},
        };
        j["measures"] = ordered_json::object();
        for (const auto& m : results) {
            j["measures"][std::string(measure_name(m.id))] = measure_json(m);
        }
        return j.dump(2) + "\n";
    }
    if (format == ReportFormat::Csv) {
        std::string out = "measure,value,defined,direction\n";
        for (const auto& m : results) {
            out += std::string(measure_name(m.id)) + "," +
                   (m.defined ? csv_value(m.value) : "undefined") + "," +
                   (m.defined ? "true" : "false") + "," + m.direction + "\n";
        }
        return out;
    }
    std::string out;
    for (const auto& m : results) {
        const bool rate_like = m.id == MeasureId::F;
        const std::string value =
            !m.defined ? "undefined (" + m.note + ")"
                       : (rate_like && percent ? fmt4(m.value * 100.0) + "%" : fmt4(m.value));
        out += pad(std::string(measure_name(m.id)), 12) + pad(value, 12) + m.direction + "\n";
    }
    return out;
}

}  // namespace ccm
