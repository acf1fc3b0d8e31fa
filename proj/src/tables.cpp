#include "ccm/tables.hpp"

#include <algorithm>
#include <cmath>

namespace ccm {

namespace {

constexpr double kWeightSumTolerance = 1e-6;

void check_probability(double p, const char* what) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw Error(ErrorCode::InvalidProbability,
                    std::string(what) + " = " + std::to_string(p) + " is outside [0,1]");
    }
}

}  // namespace

std::string negate_label(const std::string& label) {
    if (label == "y1") return "y0";
    if (label == "y0") return "y1";
    if (label.rfind("not-", 0) == 0) return label.substr(4);
    return "not-" + label;
}

JointTable JointTable::complement() const {
    JointTable out;
    out.p_y1_given_x1 = 1.0 - p_y1_given_x0;
    out.p_y1_given_x0 = 1.0 - p_y1_given_x1;
    if (cause_marginal) out.cause_marginal = 1.0 - *cause_marginal;
    out.label_x1 = label_x0;
    out.label_x0 = label_x1;
    out.label_y1 = negate_label(label_y1);
    return out;
}

JointTable JointTable::transpose() const {
    const double py1 = p_y1();
    const double py0 = 1.0 - py1;
    if (py1 <= 0.0 || py0 <= 0.0) {
        throw Error(ErrorCode::DegenerateOutcome,
                    "cannot transpose: P(" + label_y1 + ") = " + std::to_string(py1));
    }
    JointTable out;
    out.p_y1_given_x1 = joint_x1_y1() / py1;  // P(x1|y1)
    out.p_y1_given_x0 = joint_x1_y0() / py0;  // P(x1|y0)
    out.cause_marginal = py1;
    out.label_x1 = label_y1;
    out.label_x0 = negate_label(label_y1);
    out.label_y1 = label_x1;
    return out;
}

JointTable make_joint_table(double p_y1_given_x1, double p_y1_given_x0,
                            std::optional<double> p_x1,
                            std::string label_x1, std::string label_x0,
                            std::string label_y1) {
    check_probability(p_y1_given_x1, "P(y1|x1)");
    check_probability(p_y1_given_x0, "P(y1|x0)");
    if (p_x1) check_probability(*p_x1, "P(x1)");
    JointTable t;
    t.p_y1_given_x1 = p_y1_given_x1;
    t.p_y1_given_x0 = p_y1_given_x0;
    t.cause_marginal = p_x1;
    t.label_x1 = std::move(label_x1);
    t.label_x0 = std::move(label_x0);
    t.label_y1 = std::move(label_y1);
    return t;
}

const char* causal_role_name(CausalRole role) noexcept {
    return role == CausalRole::Confounder ? "confounder" : "mediator";
}

double StratifiedDataset::rate(std::size_t group_index, std::size_t cause_index) const {
    const auto& cells = groups_.at(group_index).cells;
    if (schema_ == Schema::Counts) {
        return std::get<std::array<CountCell, 2>>(cells)[cause_index].rate();
    }
    return std::get<std::array<RateCell, 2>>(cells)[cause_index].rate;
}

double StratifiedDataset::weight_given_cause(std::size_t group_index,
                                             std::size_t cause_index) const {
    if (schema_ == Schema::Counts) {
        std::int64_t cause_total = 0;
        for (const auto& g : groups_) {
            cause_total += std::get<std::array<CountCell, 2>>(g.cells)[cause_index].total;
        }
        const auto& cell = std::get<std::array<CountCell, 2>>(groups_.at(group_index).cells)[cause_index];
        return static_cast<double>(cell.total) / static_cast<double>(cause_total);
    }
    return std::get<std::array<RateCell, 2>>(groups_.at(group_index).cells)[cause_index].weight;
}

double StratifiedDataset::group_prior(std::size_t group_index) const {
    return group_priors_.at(group_index);
}

double StratifiedDataset::cause_marginal(std::size_t cause_index) const {
    return cause_marginals_.at(cause_index);
}

std::optional<std::size_t> StratifiedDataset::group_index(std::string_view label) const {
    for (std::size_t i = 0; i < groups_.size(); ++i) {
        if (groups_[i].label == label) return i;
    }
    return std::nullopt;
}

namespace {

// Shared shape validation: exactly two causes, every group once per cause.
// Returns (cause labels in first-appearance order, group labels likewise).
template <typename Row>
std::pair<std::array<std::string, 2>, std::vector<std::string>> collect_shape(
    const std::vector<Row>& rows) {
    if (rows.empty()) {
        throw Error(ErrorCode::SchemaError, "no rows");
    }
    std::vector<std::string> causes;
    std::vector<std::string> groups;
    for (const auto& row : rows) {
        if (std::find(causes.begin(), causes.end(), row.cause) == causes.end()) {
            causes.push_back(row.cause);
        }
        if (std::find(groups.begin(), groups.end(), row.group) == groups.end()) {
            groups.push_back(row.group);
        }
    }
    if (causes.size() != 2) {
        throw Error(ErrorCode::SchemaError,
                    "expected exactly 2 causes, got " + std::to_string(causes.size()));
    }
    // Uniqueness and completeness of (group, cause) pairs.
    for (const auto& g : groups) {
        for (const auto& c : causes) {
            int n = 0;
            for (const auto& row : rows) {
                if (row.group == g && row.cause == c) ++n;
            }
            if (n > 1) {
                throw Error(ErrorCode::DuplicateCell, "(" + g + ", " + c + ") appears " +
                                                          std::to_string(n) + " times");
            }
            if (n == 0) {
                throw Error(ErrorCode::MissingCell, "group '" + g + "' lacks cause '" + c + "'");
            }
        }
    }
    return {{causes[0], causes[1]}, groups};
}

template <typename Row>
const Row& find_row(const std::vector<Row>& rows, const std::string& group,
                    const std::string& cause) {
    for (const auto& row : rows) {
        if (row.group == group && row.cause == cause) return row;
    }
    throw Error(ErrorCode::MissingCell, "(" + group + ", " + cause + ")");
}

}  // namespace

StratifiedDataset build_from_counts(const std::vector<CountRow>& rows, std::string outcome_label) {
    auto [causes, group_labels] = collect_shape(rows);

    for (const auto& row : rows) {
        if (row.total <= 0) {
            throw Error(ErrorCode::InvalidCount,
                        "(" + row.group + ", " + row.cause + ") has total " +
                            std::to_string(row.total));
        }
        if (row.successes < 0 || row.successes > row.total) {
            throw Error(ErrorCode::InvalidCount,
                        "(" + row.group + ", " + row.cause + ") has " +
                            std::to_string(row.successes) + " successes of " +
                            std::to_string(row.total));
        }
    }

    StratifiedDataset ds;
    ds.schema_ = Schema::Counts;
    ds.causes_ = causes;
    ds.outcome_label_ = std::move(outcome_label);

    std::int64_t grand_total = 0;
    std::array<std::int64_t, 2> cause_totals = {0, 0};
    std::vector<std::int64_t> group_totals(group_labels.size(), 0);
    for (std::size_t gi = 0; gi < group_labels.size(); ++gi) {
        GroupRecord rec;
        rec.label = group_labels[gi];
        std::array<CountCell, 2> cells;
        for (std::size_t ci = 0; ci < 2; ++ci) {
            const auto& row = find_row(rows, group_labels[gi], causes[ci]);
            cells[ci] = CountCell{row.successes, row.total};
            cause_totals[ci] += row.total;
            group_totals[gi] += row.total;
            grand_total += row.total;
        }
        rec.cells = cells;
        ds.groups_.push_back(std::move(rec));
    }

    for (std::size_t gi = 0; gi < group_labels.size(); ++gi) {
        ds.group_priors_.push_back(static_cast<double>(group_totals[gi]) /
                                   static_cast<double>(grand_total));
    }
    for (std::size_t ci = 0; ci < 2; ++ci) {
        ds.cause_marginals_[ci] =
            static_cast<double>(cause_totals[ci]) / static_cast<double>(grand_total);
    }
    ds.has_explicit_prior_ = false;
    return ds;
}

StratifiedDataset build_from_rates(const std::vector<RateRow>& rows,
                                   const std::map<std::string, double>* group_prior,
                                   std::string outcome_label) {
    auto [causes, group_labels] = collect_shape(rows);

    for (const auto& row : rows) {
        if (!(row.rate >= 0.0 && row.rate <= 1.0)) {
            throw Error(ErrorCode::RateOutOfRange,
                        "(" + row.group + ", " + row.cause + ") rate " + std::to_string(row.rate));
        }
        if (!(row.weight >= 0.0)) {
            throw Error(ErrorCode::WeightSumViolation, "(" + row.group + ", " + row.cause +
                                                           ") weight " + std::to_string(row.weight));
        }
    }

    std::array<double, 2> weight_sums = {0.0, 0.0};
    for (std::size_t ci = 0; ci < 2; ++ci) {
        for (const auto& g : group_labels) {
            weight_sums[ci] += find_row(rows, g, causes[ci]).weight;
        }
        if (std::abs(weight_sums[ci] - 1.0) > kWeightSumTolerance) {
            throw Error(ErrorCode::WeightSumViolation,
                        "weights for cause '" + causes[ci] + "' sum to " +
                            std::to_string(weight_sums[ci]));
        }
    }

    StratifiedDataset ds;
    ds.schema_ = Schema::Rates;
    ds.causes_ = causes;
    ds.outcome_label_ = std::move(outcome_label);

    for (const auto& g : group_labels) {
        GroupRecord rec;
        rec.label = g;
        std::array<RateCell, 2> cells;
        for (std::size_t ci = 0; ci < 2; ++ci) {
            const auto& row = find_row(rows, g, causes[ci]);
            cells[ci] = RateCell{row.rate, row.weight};
        }
        rec.cells = cells;
        ds.groups_.push_back(std::move(rec));
    }

    if (group_prior != nullptr) {
        double sum = 0.0;
        for (const auto& g : group_labels) {
            auto it = group_prior->find(g);
            if (it == group_prior->end()) {
                throw Error(ErrorCode::MissingGroupPrior, "no P(g) for group '" + g + "'");
            }
            check_probability(it->second, ("P(" + g + ")").c_str());
            sum += it->second;
        }
        if (std::abs(sum - 1.0) > kWeightSumTolerance) {
            throw Error(ErrorCode::WeightSumViolation,
                        "group prior sums to " + std::to_string(sum));
        }
        for (const auto& g : group_labels) {
            ds.group_priors_.push_back(group_prior->at(g));
        }
        ds.has_explicit_prior_ = true;
    } else {
        // P(g) = sum_x P(x) P(g|x) with the default even cause marginals.
        for (std::size_t gi = 0; gi < group_labels.size(); ++gi) {
            const auto& cells = std::get<std::array<RateCell, 2>>(ds.groups_[gi].cells);
            ds.group_priors_.push_back(0.5 * cells[0].weight + 0.5 * cells[1].weight);
        }
        ds.has_explicit_prior_ = false;
    }
    return ds;
}

JointTable pool(const StratifiedDataset& dataset) {
    std::array<double, 2> pooled = {0.0, 0.0};
    for (std::size_t ci = 0; ci < 2; ++ci) {
        for (std::size_t gi = 0; gi < dataset.group_count(); ++gi) {
            pooled[ci] += dataset.weight_given_cause(gi, ci) * dataset.rate(gi, ci);
        }
    }
    JointTable t;
    t.p_y1_given_x1 = pooled[1];
    t.p_y1_given_x0 = pooled[0];
    t.cause_marginal = dataset.cause_marginal(1);
    t.label_x1 = dataset.focus_cause();
    t.label_x0 = dataset.reference_cause();
    t.label_y1 = dataset.outcome_label();
    return t;
}

}  // namespace ccm
