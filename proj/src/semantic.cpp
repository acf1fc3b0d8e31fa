#include "ccm/semantic.hpp"

#include <cmath>
#include <limits>

namespace ccm {

namespace {

// Well below the contractual 1e-6 on b1' so the achieved cross-entropy sits
// within 1e-9 of the optimum even where the objective curves sharply.
constexpr double kGoldenTolerance = 1e-12;

void check_unit(double v, const char* what) {
    if (!(v >= 0.0 && v <= 1.0)) {
        throw Error(ErrorCode::InvalidProbability,
                    std::string(what) + " = " + std::to_string(v) + " is outside [0,1]");
    }
}

void check_distribution(const BinaryDistribution& d, const char* what) {
    check_unit(d.p1, what);
    check_unit(d.p0, what);
    if (std::abs(d.p1 + d.p0 - 1.0) > 1e-9) {
        throw Error(ErrorCode::UnnormalizedDistribution,
                    std::string(what) + " sums to " + std::to_string(d.p1 + d.p0));
    }
}

// 0 * log(0) := 0; positive weight on zero mass gives +inf.
double weighted_neg_log2(double weight, double p) {
    if (weight == 0.0) return 0.0;
    if (p <= 0.0) return std::numeric_limits<double>::infinity();
    return -weight * std::log2(p);
}

// Truth values (T(s1|x1), T(s1|x0)) for a disbelief under an orientation.
std::pair<double, double> truth_values(BeliefOrientation orientation, double b1_prime) {
    if (orientation == BeliefOrientation::PositiveBelief) return {1.0, b1_prime};
    return {b1_prime, 1.0};
}

// Golden-section minimization of f over [lo, hi] to the given x-tolerance.
template <typename F>
double golden_section_min(F f, double lo, double hi, double tol) {
    constexpr double inv_phi = 0.6180339887498949;
    double a = lo, b = hi;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = f(c), fd = f(d);
    while (b - a > tol) {
        if (fc <= fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    return 0.5 * (a + b);
}

}  // namespace

BinaryDistribution make_binary_distribution(double p1, double p0) {
    BinaryDistribution d{p1, p0};
    check_distribution(d, "distribution");
    return d;
}

SemanticEvaluation evaluate(const TruthAssignment& truth, const BinaryDistribution& cause_prior,
                            const BinaryDistribution& posterior_given_outcome) {
    check_unit(truth.b1_prime, "b1'");
    check_distribution(cause_prior, "cause prior");
    check_distribution(posterior_given_outcome, "P(x|y1)");

    const auto [t_x1, t_x0] = truth_values(truth.orientation, truth.b1_prime);
    const double t_s1 = cause_prior.p1 * t_x1 + cause_prior.p0 * t_x0;
    if (t_s1 <= 0.0) {
        throw Error(ErrorCode::ZeroLogicalProbability, "T(s1) = 0");
    }

    SemanticEvaluation out;
    out.logical_probability = t_s1;
    out.posterior.p1 = cause_prior.p1 * t_x1 / t_s1;
    out.posterior.p0 = cause_prior.p0 * t_x0 / t_s1;

    out.cross_entropy_bits = weighted_neg_log2(posterior_given_outcome.p1, out.posterior.p1) +
                             weighted_neg_log2(posterior_given_outcome.p0, out.posterior.p0);
    const double prior_surprisal = weighted_neg_log2(posterior_given_outcome.p1, cause_prior.p1) +
                                   weighted_neg_log2(posterior_given_outcome.p0, cause_prior.p0);
    out.information_bits = prior_surprisal - out.cross_entropy_bits;
    return out;
}

double disbelief_cross_entropy(BeliefOrientation orientation, double b1_prime,
                               const BinaryDistribution& cause_prior,
                               const BinaryDistribution& posterior_given_outcome) {
    const auto [t_x1, t_x0] = truth_values(orientation, b1_prime);
    const double t_s1 = cause_prior.p1 * t_x1 + cause_prior.p0 * t_x0;
    if (t_s1 <= 0.0) return std::numeric_limits<double>::infinity();
    return weighted_neg_log2(posterior_given_outcome.p1, cause_prior.p1 * t_x1 / t_s1) +
           weighted_neg_log2(posterior_given_outcome.p0, cause_prior.p0 * t_x0 / t_s1);
}

DisbeliefOptimum optimize_disbelief(const BinaryDistribution& cause_prior,
                                    const BinaryDistribution& posterior_given_outcome) {
    check_distribution(cause_prior, "cause prior");
    check_distribution(posterior_given_outcome, "P(x|y1)");
    if (cause_prior.p1 <= 0.0 || cause_prior.p1 >= 1.0) {
        throw Error(ErrorCode::DegeneratePrior, "P(x1) = " + std::to_string(cause_prior.p1));
    }

    auto optimize_orientation = [&](BeliefOrientation orientation) {
        auto objective = [&](double b) {
            return disbelief_cross_entropy(orientation, b, cause_prior, posterior_given_outcome);
        };
        // Coarse scan guards against picking the wrong basin near cc = 0.
        double best_b = 0.0;
        double best_h = objective(0.0);
        for (int i = 1; i <= 100; ++i) {
            const double b = static_cast<double>(i) / 100.0;
            const double h = objective(b);
            if (h < best_h) {
                best_h = h;
                best_b = b;
            }
        }
        const double lo = std::max(0.0, best_b - 0.01);
        const double hi = std::min(1.0, best_b + 0.01);
        double refined = golden_section_min(objective, lo, hi, kGoldenTolerance);
        if (objective(refined) > best_h) refined = best_b;
        return std::pair{refined, objective(refined)};
    };

    const auto [pos_b, pos_h] = optimize_orientation(BeliefOrientation::PositiveBelief);
    const auto [neg_b, neg_h] = optimize_orientation(BeliefOrientation::NegativeBelief);

    DisbeliefOptimum out;
    if (pos_h <= neg_h) {
        out.b1_prime = pos_b;
        out.orientation = BeliefOrientation::PositiveBelief;
        out.cross_entropy_bits = pos_h;
        out.cc = 1.0 - pos_b;
    } else {
        out.b1_prime = neg_b;
        out.orientation = BeliefOrientation::NegativeBelief;
        out.cross_entropy_bits = neg_h;
        out.cc = -(1.0 - neg_b);
    }
    return out;
}

JointTable channel_from_disbelief(const TruthAssignment& truth) {
    check_unit(truth.b1_prime, "b1'");
    check_unit(truth.b0_prime, "b0'");
    const double product = truth.b1_prime * truth.b0_prime;
    if (product >= 1.0) {
        throw Error(ErrorCode::DegenerateChannel, "b1' * b0' = 1");
    }
    const double p_y1_given_x1 = (1.0 - truth.b0_prime) / (1.0 - product);
    const double p_y0_given_x0 = (1.0 - truth.b1_prime) / (1.0 - product);
    JointTable t;
    t.p_y1_given_x1 = p_y1_given_x1;
    t.p_y1_given_x0 = 1.0 - p_y0_given_x0;
    return t;
}

BinaryDistribution predict_from_cc(double cc, const BinaryDistribution& cause_prior) {
    if (!(cc >= -1.0 && cc <= 1.0)) {
        throw Error(ErrorCode::InvalidProbability, "cc = " + std::to_string(cc));
    }
    check_distribution(cause_prior, "cause prior");
    if (cause_prior.p1 <= 0.0 || cause_prior.p1 >= 1.0) {
        throw Error(ErrorCode::DegeneratePrior, "P(x1) = " + std::to_string(cause_prior.p1));
    }

    TruthAssignment truth;
    if (cc >= 0.0) {
        truth.b1_prime = 1.0 - cc;
        truth.orientation = BeliefOrientation::PositiveBelief;
    } else {
        truth.b1_prime = 1.0 + cc;
        truth.orientation = BeliefOrientation::NegativeBelief;
    }
    const auto [t_x1, t_x0] = cc >= 0.0 ? std::pair{1.0, truth.b1_prime}
                                        : std::pair{truth.b1_prime, 1.0};
    const double t_s1 = cause_prior.p1 * t_x1 + cause_prior.p0 * t_x0;
    return BinaryDistribution{cause_prior.p1 * t_x1 / t_s1, cause_prior.p0 * t_x0 / t_s1};
}

double predict_from_ce(double ce) {
    if (!(ce >= -1.0 && ce <= 1.0)) {
        throw Error(ErrorCode::InvalidProbability, "ce = " + std::to_string(ce));
    }
    if (ce >= 0.0) return 1.0 / (2.0 - ce);
    return 1.0 - 1.0 / (2.0 + ce);
}

TruthPosterior truth_posterior(std::span<const double> truth_values,
                               std::span<const double> prior) {
    if (truth_values.size() != prior.size() || truth_values.empty()) {
        throw Error(ErrorCode::UnnormalizedDistribution, "mismatched truth/prior sizes");
    }
    double prior_sum = 0.0;
    double t_theta = 0.0;
    for (std::size_t i = 0; i < prior.size(); ++i) {
        check_unit(truth_values[i], "truth value");
        if (prior[i] < 0.0) {
            throw Error(ErrorCode::InvalidProbability, "negative prior mass");
        }
        prior_sum += prior[i];
        t_theta += prior[i] * truth_values[i];
    }
    if (std::abs(prior_sum - 1.0) > 1e-9) {
        throw Error(ErrorCode::UnnormalizedDistribution,
                    "prior sums to " + std::to_string(prior_sum));
    }
    if (t_theta <= 0.0) {
        throw Error(ErrorCode::ZeroLogicalProbability, "T(theta) = 0");
    }
    TruthPosterior out;
    out.logical_probability = t_theta;
    out.posterior.resize(prior.size());
    for (std::size_t i = 0; i < prior.size(); ++i) {
        out.posterior[i] = prior[i] * truth_values[i] / t_theta;
    }
    return out;
}

}  // namespace ccm
