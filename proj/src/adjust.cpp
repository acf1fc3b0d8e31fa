#include "ccm/adjust.hpp"

#include <cmath>

namespace ccm {

namespace {

int sign_of(double value) {
    if (value > 0.0) return 1;
    if (value < 0.0) return -1;
    return 0;
}

}  // namespace

DoTable DoTable::complement() const {
    DoTable out;
    out.p_y1_do_x1 = 1.0 - p_y1_do_x0;
    out.p_y1_do_x0 = 1.0 - p_y1_do_x1;
    out.role_used = role_used;
    out.weights_used = weights_used;
    out.label_x1 = label_x0;
    out.label_x0 = label_x1;
    out.label_y1 = negate_label(label_y1);
    return out;
}

JointTable to_joint(const DoTable& table, std::optional<double> p_x1) {
    return make_joint_table(table.p_y1_do_x1, table.p_y1_do_x0, p_x1, table.label_x1,
                            table.label_x0, table.label_y1);
}

DoTable do_adjust(const StratifiedDataset& dataset, CausalRole role) {
    DoTable out;
    out.role_used = role;
    out.label_x1 = dataset.focus_cause();
    out.label_x0 = dataset.reference_cause();
    out.label_y1 = dataset.outcome_label();

    for (std::size_t gi = 0; gi < dataset.group_count(); ++gi) {
        out.weights_used[dataset.groups()[gi].label] = dataset.group_prior(gi);
    }

    if (role == CausalRole::Mediator) {
        const JointTable pooled = pool(dataset);
        out.p_y1_do_x1 = pooled.p_y1_given_x1;
        out.p_y1_do_x0 = pooled.p_y1_given_x0;
        return out;
    }

    double adj_ref = 0.0;
    double adj_focus = 0.0;
    for (std::size_t gi = 0; gi < dataset.group_count(); ++gi) {
        const double pg = dataset.group_prior(gi);
        adj_ref += pg * dataset.rate(gi, 0);
        adj_focus += pg * dataset.rate(gi, 1);
    }
    out.p_y1_do_x1 = adj_focus;
    out.p_y1_do_x0 = adj_ref;
    return out;
}

ParadoxReport detect_simpson(const StratifiedDataset& dataset) {
    ParadoxReport report;

    bool has_positive = false;
    bool has_negative = false;
    bool has_tie = false;
    for (std::size_t gi = 0; gi < dataset.group_count(); ++gi) {
        const int s = sign_of(dataset.rate(gi, 1) - dataset.rate(gi, 0));
        report.group_direction.emplace_back(dataset.groups()[gi].label, s);
        if (s > 0) has_positive = true;
        if (s < 0) has_negative = true;
        if (s == 0) has_tie = true;
    }
    // A tie carries no strict direction, so it breaks unanimity.
    report.unanimous = !has_tie && (has_positive != has_negative);

    const JointTable pooled = pool(dataset);
    report.overall_direction = sign_of(pooled.p_y1_given_x1 - pooled.p_y1_given_x0);

    const DoTable adjusted = do_adjust(dataset, CausalRole::Confounder);
    report.adjusted_direction = sign_of(adjusted.p_y1_do_x1 - adjusted.p_y1_do_x0);

    if (dataset.group_count() >= 2 && report.unanimous) {
        const int group_sign = has_positive ? 1 : -1;
        report.paradox_present = report.overall_direction == -group_sign;
    }
    return report;
}

double threshold_outcome_probability(const std::vector<std::pair<double, double>>& z_distribution,
                                     double z0) {
    double sum = 0.0;
    double tail = 0.0;
    for (const auto& [z, p] : z_distribution) {
        if (p < 0.0) {
            throw Error(ErrorCode::UnnormalizedDistribution,
                        "negative mass at z = " + std::to_string(z));
        }
        sum += p;
        if (z >= z0) tail += p;
    }
    if (std::abs(sum - 1.0) > 1e-9) {
        throw Error(ErrorCode::UnnormalizedDistribution,
                    "distribution sums to " + std::to_string(sum));
    }
    return tail;
}

}  // namespace ccm
