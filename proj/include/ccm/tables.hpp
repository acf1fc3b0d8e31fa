#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ccm/errors.hpp"

namespace ccm {

// Conditional/joint view of a binary-cause, binary-outcome table.
//
// Slot convention throughout the library: the x1 slot holds the focus cause
// (the new/alternative one, the numerator of a "x_new/x_ref => y1" rule) and
// the x0 slot holds the default/reference cause (the denominator). The cause
// marginal is optional; when absent it defaults to an even split, which is
// the documented convention for rate-only data.
struct JointTable {
    double p_y1_given_x1 = 0.0;
    double p_y1_given_x0 = 0.0;
    std::optional<double> cause_marginal;  // P(x1)
    std::string label_x1 = "x1";
    std::string label_x0 = "x0";
    std::string label_y1 = "y1";

    double p_x1() const { return cause_marginal.value_or(0.5); }
    double p_x0() const { return 1.0 - p_x1(); }
    double p_y1() const { return p_x1() * p_y1_given_x1 + p_x0() * p_y1_given_x0; }
    double p_y0() const { return 1.0 - p_y1(); }

    // Joint cells P(x, y).
    double joint_x1_y1() const { return p_x1() * p_y1_given_x1; }
    double joint_x1_y0() const { return p_x1() * (1.0 - p_y1_given_x1); }
    double joint_x0_y1() const { return p_x0() * p_y1_given_x0; }
    double joint_x0_y0() const { return p_x0() * (1.0 - p_y1_given_x0); }

    // Swaps the causes and negates the outcome: the table of the rule
    // "x_ref/x_new => y0". Used for the complementary confirmation degree.
    JointTable complement() const;

    // Swaps the roles of cause and outcome (evidence <-> hypothesis); the
    // result's conditionals are P(x|y). Requires nondegenerate P(y).
    JointTable transpose() const;
};

// "y1" <-> "y0"; other labels gain or lose a "not-" prefix.
std::string negate_label(const std::string& label);

// Validating factory; throws Error(InvalidProbability) on out-of-range input.
JointTable make_joint_table(double p_y1_given_x1, double p_y1_given_x0,
                            std::optional<double> p_x1 = std::nullopt,
                            std::string label_x1 = "x1", std::string label_x0 = "x0",
                            std::string label_y1 = "y1");

enum class Schema { Counts, Rates };

enum class CausalRole { Confounder, Mediator };

const char* causal_role_name(CausalRole role) noexcept;

struct CountCell {
    std::int64_t successes = 0;
    std::int64_t total = 0;

    double rate() const { return static_cast<double>(successes) / static_cast<double>(total); }
    bool operator==(const CountCell&) const = default;
};

struct RateCell {
    double rate = 0.0;
    double weight = 0.0;  // P(g|x) for this cell's cause

    bool operator==(const RateCell&) const = default;
};

// One stratum row; cells are indexed by cause slot (0 = reference, 1 = focus).
struct GroupRecord {
    std::string label;
    std::variant<std::array<CountCell, 2>, std::array<RateCell, 2>> cells;

    bool operator==(const GroupRecord&) const = default;
};

struct CountRow {
    std::string group;
    std::string cause;
    std::int64_t successes = 0;
    std::int64_t total = 0;
};

struct RateRow {
    std::string group;
    std::string cause;
    double rate = 0.0;
    double weight = 0.0;
};

// Immutable stratified success-rate data for two causes. Counts-schema data
// keeps exact integer cells; every probability is derived on access so no
// rounding is baked in at construction time.
class StratifiedDataset {
public:
    Schema schema() const { return schema_; }
    const std::array<std::string, 2>& causes() const { return causes_; }
    const std::string& reference_cause() const { return causes_[0]; }
    const std::string& focus_cause() const { return causes_[1]; }
    const std::string& outcome_label() const { return outcome_label_; }
    const std::vector<GroupRecord>& groups() const { return groups_; }
    std::size_t group_count() const { return groups_.size(); }

    // P(y1 | x_cause, g)
    double rate(std::size_t group_index, std::size_t cause_index) const;
    // P(g | x_cause)
    double weight_given_cause(std::size_t group_index, std::size_t cause_index) const;
    // P(g)
    double group_prior(std::size_t group_index) const;
    // P(x_cause); cause totals over grand total for counts, 0.5 for rates
    double cause_marginal(std::size_t cause_index) const;

    bool has_explicit_prior() const { return has_explicit_prior_; }

    std::optional<std::size_t> group_index(std::string_view label) const;

    bool operator==(const StratifiedDataset&) const = default;

    friend StratifiedDataset build_from_counts(const std::vector<CountRow>&, std::string);
    friend StratifiedDataset build_from_rates(const std::vector<RateRow>&,
                                              const std::map<std::string, double>*, std::string);

private:
    Schema schema_ = Schema::Counts;
    std::array<std::string, 2> causes_;
    std::string outcome_label_ = "y1";
    std::vector<GroupRecord> groups_;
    std::vector<double> group_priors_;  // P(g), aligned with groups_
    std::array<double, 2> cause_marginals_ = {0.5, 0.5};
    bool has_explicit_prior_ = false;
};

// Builds a Counts-schema dataset. Cause and group order follow first
// appearance in rows; the first cause seen is the reference.
// Errors: DuplicateCell, MissingCell, InvalidCount, SchemaError.
StratifiedDataset build_from_counts(const std::vector<CountRow>& rows,
                                    std::string outcome_label = "y1");

// Builds a Rates-schema dataset. Per-cause weights must each sum to 1
// within 1e-6; group_prior, when given, likewise. Without a prior, P(g) is
// the equal-cause-marginal average of the per-cause weights.
// Errors: RateOutOfRange, WeightSumViolation, DuplicateCell, MissingCell, SchemaError.
StratifiedDataset build_from_rates(const std::vector<RateRow>& rows,
                                   const std::map<std::string, double>* group_prior = nullptr,
                                   std::string outcome_label = "y1");

// Observed (unadjusted) pooled table: P(y1|x) = sum_g P(g|x) P(y1|x,g).
JointTable pool(const StratifiedDataset& dataset);

}  // namespace ccm
