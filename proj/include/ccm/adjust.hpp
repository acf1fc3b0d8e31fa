#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ccm/tables.hpp"

namespace ccm {

// Causal posterior probabilities P(y1|do(x)) for both causes. A pair of
// marginals, deliberately without a cause prior attached: P(do(x1)) has no
// probabilistic meaning.
struct DoTable {
    double p_y1_do_x1 = 0.0;  // focus cause
    double p_y1_do_x0 = 0.0;  // reference cause
    CausalRole role_used = CausalRole::Confounder;
    std::map<std::string, double> weights_used;  // group -> weight
    std::string label_x1 = "x1";
    std::string label_x0 = "x0";
    std::string label_y1 = "y1";

    DoTable complement() const;
};

// View of a DoTable as a joint table for measure computation; the caller
// supplies the cause marginal (typically the observed one).
JointTable to_joint(const DoTable& table, std::optional<double> p_x1 = std::nullopt);

struct ParadoxReport {
    // Sign of P(y1|x_focus, g) - P(y1|x_ref, g) per group: -1, 0, +1.
    std::vector<std::pair<std::string, int>> group_direction;
    bool unanimous = false;       // all strict group signs agree (ties break it)
    int overall_direction = 0;    // sign of the pooled difference
    bool paradox_present = false; // unanimous and pooled strictly reversed
    int adjusted_direction = 0;   // sign after confounder adjustment
};

// Confounder: P(y1|do(x)) = sum_g P(g) P(y1|x,g). Mediator: pass-through of
// the pooled observed rates.
DoTable do_adjust(const StratifiedDataset& dataset, CausalRole role);

ParadoxReport detect_simpson(const StratifiedDataset& dataset);

// Tail mass sum_{z >= z0} p(z) of a discrete distribution over ordered z.
// Applied to p(z|do(x)) this gives the threshold-classified P(y1|do(x)).
// Errors: UnnormalizedDistribution.
double threshold_outcome_probability(const std::vector<std::pair<double, double>>& z_distribution,
                                     double z0);

}  // namespace ccm
