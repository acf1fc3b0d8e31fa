#pragma once

#include <span>
#include <vector>

#include "ccm/tables.hpp"

namespace ccm {

enum class BeliefOrientation { PositiveBelief, NegativeBelief };

// Degrees of disbelief defining a semantic channel for the rule pair
// s1 = "x1 => y1", s0 = "x0 => y0".
//
// PositiveBelief: T(s1|x1) = 1, T(s1|x0) = b1'. NegativeBelief (the
// disconfirmed case): T(s1|x1) = b1', T(s1|x0) = 1.
struct TruthAssignment {
    double b1_prime = 1.0;
    double b0_prime = 1.0;
    BeliefOrientation orientation = BeliefOrientation::PositiveBelief;
};

// Distribution over the binary cause (x1, x0).
struct BinaryDistribution {
    double p1 = 0.5;
    double p0 = 0.5;
};

BinaryDistribution make_binary_distribution(double p1, double p0);

struct SemanticEvaluation {
    double logical_probability = 0.0;   // T(s1)
    BinaryDistribution posterior;       // P(x|theta1)
    double information_bits = 0.0;      // I(X;theta1)
    double cross_entropy_bits = 0.0;    // H(X|theta1)
};

// Logical probability, posterior, average semantic information and
// cross-entropy of s1 under the given truth assignment (log base 2).
// Errors: ZeroLogicalProbability, InvalidProbability.
SemanticEvaluation evaluate(const TruthAssignment& truth, const BinaryDistribution& cause_prior,
                            const BinaryDistribution& posterior_given_outcome);

struct DisbeliefOptimum {
    double b1_prime = 1.0;
    BeliefOrientation orientation = BeliefOrientation::PositiveBelief;
    double cross_entropy_bits = 0.0;
    double cc = 0.0;  // signed degree of confirmation: +-(1 - b1')
};

// Minimizes the cross-entropy H(X|theta1) over b1' in [0,1] numerically for
// both belief orientations (101-point scan + golden-section refinement to
// 1e-6) and returns the better one. Errors: DegeneratePrior.
DisbeliefOptimum optimize_disbelief(const BinaryDistribution& cause_prior,
                                    const BinaryDistribution& posterior_given_outcome);

// Cross-entropy H(X|theta1) in bits at a given disbelief; exposed so callers
// can probe the objective the optimizer minimizes.
double disbelief_cross_entropy(BeliefOrientation orientation, double b1_prime,
                               const BinaryDistribution& cause_prior,
                               const BinaryDistribution& posterior_given_outcome);

// Shannon channel determined by the two degrees of disbelief:
// P(y1|x1) = (1-b0')/(1-b1'b0'), P(y0|x0) = (1-b1')/(1-b1'b0').
// Errors: DegenerateChannel when b1' = b0' = 1.
JointTable channel_from_disbelief(const TruthAssignment& truth);

// Probability prediction of the cause from a degree of causal confirmation:
// cc >= 0 uses b1' = 1-cc in the positive parameterization, cc < 0 uses
// b1' = 1+cc in the negative one. Errors: DegeneratePrior.
BinaryDistribution predict_from_cc(double cc, const BinaryDistribution& cause_prior);

// Outcome prediction from Ce: 1/(2-ce) for ce >= 0, else 1 - 1/(2+ce).
double predict_from_ce(double ce);

struct TruthPosterior {
    double logical_probability = 0.0;
    std::vector<double> posterior;
};

// General discrete form: T(theta) = sum P(x) T(theta|x), posterior by
// Bayes-like renormalization. Errors: ZeroLogicalProbability,
// InvalidProbability, UnnormalizedDistribution.
TruthPosterior truth_posterior(std::span<const double> truth_values,
                               std::span<const double> prior);

}  // namespace ccm
