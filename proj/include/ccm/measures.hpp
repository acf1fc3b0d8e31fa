#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ccm/tables.hpp"

namespace ccm {

// Catalog order is the documented fixed report order.
enum class MeasureId {
    F,          // f: P(h1|e1)
    D,          // P(h1|e1) - P(h1)
    M,          // P(e1|h1) - P(e1)
    R,          // log2 [P(h1|e1)/P(h1)]
    C,          // P(e1,h1) - P(e1)P(h1)
    Z,          // normalized D
    S,          // P(h1|e1) - P(h1|e0)
    N,          // P(e1|h1) - P(e1|h0)
    L,          // log2 [P(e1|h1)/P(e1|h0)]
    Fko,        // [P(e1|h1)-P(e1|h0)] / [P(e1|h1)+P(e1|h0)]
    BStar,      // [P(e1|h1)-P(e1|h0)] / max(P(e1|h1),P(e1|h0))
    CStar,      // [2P(h1|e1)-1] / max(P(h1|e1),1-P(h1|e1))
    Rd,         // risk difference
    Rr,         // risk ratio
    Pd,         // probability of causation max(0,(R-1)/R)
    DeltaStar,  // RD / (1-P(y1|x0))
    Or,         // odds ratio
    OrN,        // (OR-1)/max(OR,1)
    Cc,         // (R-1)/max(R,1)
    Ce,         // (2P(y1|x1)-1)/max(P(y1|x1),1-P(y1|x1))
};

std::string_view measure_name(MeasureId id) noexcept;
std::optional<MeasureId> measure_from_name(std::string_view name) noexcept;
const std::vector<MeasureId>& measure_catalog();

struct MeasureResult {
    MeasureId id = MeasureId::Cc;
    double value = 0.0;
    std::string direction;  // evaluated rule, e.g. "x2/x1 => y1"
    bool defined = true;
    std::string note;  // degeneracy note when defined is false
};

// m(x_i, y_j) = P(y_j|x_i) / P(y_j), with the marginals it was derived from.
struct CorrelationMatrix {
    double m_x1_y1 = 1.0;
    double m_x1_y0 = 1.0;
    double m_x0_y1 = 1.0;
    double m_x0_y0 = 1.0;
    double p_x1 = 0.5;
    double p_y1 = 0.5;
};

// Errors: DegenerateOutcome when P(y_j) = 0 for either outcome.
CorrelationMatrix correlation_matrix(const JointTable& table);

struct RiskMeasures {
    MeasureResult rd;
    MeasureResult rr;
    MeasureResult pd;
    MeasureResult delta_star;
};

RiskMeasures risk_measures(const JointTable& table);

// Cc(x1/x0 => y1) = (R-1)/max(R,1). Both conditionals zero: defined=false.
MeasureResult causal_confirmation_cc(const JointTable& table);

// Ce(x1 => y1) = (2P(y1|x1)-1)/max(P(y1|x1), 1-P(y1|x1)). Always defined.
// With complement_outcome the y0 direction is evaluated, which is the exact
// negation of the y1 direction.
MeasureResult causal_confirmation_ce(const JointTable& table, bool complement_outcome = false);

struct OddsMeasures {
    MeasureResult odds_ratio;
    MeasureResult or_n;
};

OddsMeasures odds_measures(const JointTable& table);

// The eleven Bayesian confirmation measures plus f, with e := x and h := y.
// Degenerate outcome marginals mark the affected measures defined=false.
std::map<MeasureId, MeasureResult> bayesian_suite(const JointTable& table);

struct CorrelationPrediction {
    double p_y1_given_x1 = 0.0;
    double p_y1_given_x0 = 0.0;
    double p_x1_given_y1 = 0.0;
    double p_x0_given_y1 = 0.0;
};

// Probability prediction from the correlation matrix and (possibly new)
// marginals: P(y|x_i) = P(y) m(x_i,y) / sum_y P(y) m(x_i,y), and
// symmetrically P(x|y1). Errors: DegenerateMarginal.
CorrelationPrediction predict_with_correlation(const CorrelationMatrix& m, double p_x1,
                                               double p_y1);

// Dispatch by id over the full catalog (suite measures computed as a batch).
std::vector<MeasureResult> compute_measures(const JointTable& table,
                                            const std::vector<MeasureId>& ids);

}  // namespace ccm
