#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ccm/adjust.hpp"
#include "ccm/measures.hpp"
#include "ccm/tables.hpp"

namespace ccm {

enum class ReportFormat { Text, Csv, Json };

std::optional<ReportFormat> report_format_from_name(std::string_view name);

struct AnalysisOptions {
    CausalRole role = CausalRole::Confounder;
    std::vector<MeasureId> measures;
    bool percent = false;  // display-only; internal math stays proportion-scale
};

// Full analysis of one stratified dataset: observed pooling, do-adjustment,
// paradox detection and the requested measures on both tables. Adjusted
// measures are computed on the do-conditionals with the observed cause
// marginal attached.
struct AnalysisReport {
    std::string dataset_name;
    StratifiedDataset dataset;
    JointTable observed;
    DoTable adjusted;
    ParadoxReport paradox;
    std::vector<MeasureResult> measures_observed;
    std::vector<MeasureResult> measures_adjusted;
    // Complementary confirmation Cc(x_ref/x_focus => y0) on the adjusted
    // table; present when cc was requested.
    std::optional<MeasureResult> cc_complement_adjusted;
    bool percent = false;
};

AnalysisReport analyze(const StratifiedDataset& dataset, std::string dataset_name,
                       const AnalysisOptions& options);

// Deterministic rendering. Text aligns columns and prints 4 significant
// digits; json carries full-precision values.
std::string render_report(const AnalysisReport& report, ReportFormat format);

// One-table measure rows (used by the flat-table CLI path).
std::string render_measures(const JointTable& table, const std::vector<MeasureResult>& results,
                            ReportFormat format, bool percent);

}  // namespace ccm
