// Acceptance suite: recomputes every bundled reference result at its pinned
// tolerance and runs the fuzzed property suites. Prints one line per
// criterion; exits nonzero if any criterion fails.

#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "ccm/adjust.hpp"
#include "ccm/builtin.hpp"
#include "ccm/measures.hpp"
#include "ccm/semantic.hpp"
#include "ccm/tables.hpp"

using namespace ccm;

namespace {

struct SubCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct Criterion {
    int id;
    std::string title;
    std::vector<SubCheck> subs;

    bool pass() const {
        for (const auto& s : subs) {
            if (!s.pass) return false;
        }
        return true;
    }
};

void expect_near(Criterion& c, const std::string& name, double computed, double expected,
                 double tolerance, const std::string& note = {}) {
    SubCheck s;
    s.name = name;
    s.pass = std::abs(computed - expected) <= tolerance;
    char buf[160];
    std::snprintf(buf, sizeof(buf), "computed % .6f expected % .6g +/-%g", computed, expected,
                  tolerance);
    s.detail = buf;
    if (!note.empty()) s.detail += "  [" + note + "]";
    c.subs.push_back(std::move(s));
}

void expect_true(Criterion& c, const std::string& name, bool pass, const std::string& note = {}) {
    c.subs.push_back(SubCheck{name, pass, note});
}

struct Gen {
    std::mt19937 engine;
    explicit Gen(unsigned seed) : engine(seed) {}
    double unit() { return std::uniform_real_distribution<double>(0.0, 1.0)(engine); }
    double in(double lo, double hi) {
        return std::uniform_real_distribution<double>(lo, hi)(engine);
    }
    int upto(int n) { return std::uniform_int_distribution<int>(0, n)(engine); }
    double conditional() {
        const int roll = upto(19);
        if (roll == 0) return 0.0;
        if (roll == 1) return 1.0;
        return unit();
    }
};

// The printed-precision rendition of the stone-size table: two-digit rates
// with the exact subgroup weights and P(g) = (0.51, 0.49).
StratifiedDataset printed_precision_kidney() {
    const std::map<std::string, double> prior = {{"small", 0.51}, {"large", 0.49}};
    return build_from_rates(
        {
            {"small", "x1", 0.87, 270.0 / 350.0},
            {"small", "x2", 0.93, 87.0 / 350.0},
            {"large", "x1", 0.69, 80.0 / 350.0},
            {"large", "x2", 0.73, 263.0 / 350.0},
        },
        &prior);
}

Criterion criterion_1() {
    Criterion c{1, "kidney stones: rates, adjustment, Cc pair, paradox", {}};
    const auto& counts = *find_builtin("kidney_stones")->stratified;
    const JointTable observed = pool(counts);
    expect_near(c, "observed P(y1|x1)", observed.p_y1_given_x0, 0.83, 0.005);
    expect_near(c, "observed P(y1|x2)", observed.p_y1_given_x1, 0.78, 0.005);

    const auto printed = printed_precision_kidney();
    const DoTable adj_printed = do_adjust(printed, CausalRole::Confounder);
    expect_near(c, "P(y1|do(x1)) printed-precision", adj_printed.p_y1_do_x0, 0.7818, 0.0005);
    expect_near(c, "P(y1|do(x2)) printed-precision", adj_printed.p_y1_do_x1, 0.8320, 0.0005);

    const DoTable adj_counts = do_adjust(counts, CausalRole::Confounder);
    expect_near(c, "P(y1|do(x1)) counts, exact arithmetic", adj_counts.p_y1_do_x0,
                0.51 * (235.0 / 270.0) + 0.49 * (55.0 / 80.0), 1e-12);
    expect_near(c, "P(y1|do(x2)) counts, exact arithmetic", adj_counts.p_y1_do_x1,
                0.51 * (81.0 / 87.0) + 0.49 * (192.0 / 263.0), 1e-12);

    for (const auto& [label, adjusted] :
         {std::pair{"counts", adj_counts}, std::pair{"printed", adj_printed}}) {
        const JointTable joint = to_joint(adjusted, 0.5);
        expect_near(c, std::string("Cc(x2/x1 => y1) ") + label,
                    causal_confirmation_cc(joint).value, 0.06, 0.005);
        expect_near(c, std::string("Cc(x1/x2 => y0) ") + label,
                    causal_confirmation_cc(to_joint(adjusted.complement(), 0.5)).value, 0.23,
                    0.01);
    }

    const ParadoxReport paradox = detect_simpson(counts);
    expect_true(c, "paradox_present", paradox.paradox_present);
    expect_true(c, "adjusted direction favors x2", paradox.adjusted_direction == 1);
    return c;
}

Criterion criterion_2() {
    Criterion c{2, "Pd vs Delta*P contrast pair", {}};
    const auto* d = find_builtin("pd_vs_deltastar");
    const RiskMeasures big = risk_measures(d->slices[0].table);
    expect_near(c, "Pd(0.9, 0.8)", big.pd.value, 0.11, 0.005);
    expect_near(c, "Delta*P(0.9, 0.8)", big.delta_star.value, 0.500, 1e-9);
    const RiskMeasures none = risk_measures(d->slices[1].table);
    expect_true(c, "Pd(0.2, 0) = 1 exactly", none.pd.value == 1.0);
    expect_near(c, "Delta*P(0.2, 0)", none.delta_star.value, 0.200, 1e-9);
    return c;
}

Criterion criterion_3() {
    Criterion c{3, "age-stratified CFR: observed, adjusted, Cc", {}};
    const auto& ds = *find_builtin("covid_cfr_by_age")->stratified;
    const JointTable observed = pool(ds);
    expect_near(c, "observed CFR% x1", observed.p_y1_given_x1 * 100.0, 1.04, 0.02);
    expect_near(c, "observed CFR% x2", observed.p_y1_given_x0 * 100.0, 0.73, 0.02);
    expect_near(c, "observed Pd", risk_measures(observed).pd.value, 0.30, 0.01);

    const DoTable adjusted = do_adjust(ds, CausalRole::Confounder);
    expect_near(c, "adjusted CFR% x1", adjusted.p_y1_do_x1 * 100.0, 0.80, 0.02);
    expect_near(c, "adjusted CFR% x2", adjusted.p_y1_do_x0 * 100.0, 1.05, 0.02);

    const double cc = causal_confirmation_cc(to_joint(adjusted, observed.p_x1())).value;
    expect_near(c, "adjusted Cc(x1/x2 => y1)", cc, -0.23, 0.01,
                "published -0.28; documented source-precision deviation");
    expect_true(c, "Cc inside the accepted band [-0.30, -0.22]", cc >= -0.30 && cc <= -0.22);
    return c;
}

Criterion criterion_4() {
    Criterion c{4, "vaccination rates: negative confirmation", {}};
    const auto* d = find_builtin("vaccine_rates");
    expect_near(c, "Cc(x1/x0 => y1) cases",
                causal_confirmation_cc(d->slices[0].table).value, -0.63, 0.005);
    const double deaths = causal_confirmation_cc(d->slices[1].table).value;
    expect_near(c, "Cc(x1/x0 => y1) deaths", deaths, -0.820, 0.005,
                "published -0.79; accepted band [-0.83, -0.78]");
    expect_true(c, "deaths Cc inside the accepted band", deaths >= -0.83 && deaths <= -0.78);
    return c;
}

Criterion criterion_5() {
    Criterion c{5, "mortality composition and confirmation", {}};
    const auto* d = find_builtin("mortality_covid");
    expect_near(c, "Cc unvaccinated", causal_confirmation_cc(d->slices[0].table).value, 0.0714,
                0.002);
    expect_near(c, "Cc vaccinated", causal_confirmation_cc(d->slices[1].table).value, 0.0137,
                0.002);
    const double composed = combined_independent_rate(0.013, 0.001);
    expect_near(c, "0.013 + 0.001 - 0.013*0.001", composed, 0.013987, 1e-6);
    expect_true(c, "composition rounds to 0.014",
                std::abs(composed - 0.014) < 0.0005);
    return c;
}

Criterion criterion_6() {
    Criterion c{6, "D-measure walkthrough", {}};
    const JointTable printed = make_joint_table(0.78, 0.83, 0.5, "x2", "x1");
    expect_near(c, "P(y1) from published pooled rates at P(x)=0.5", printed.p_y1(), 0.805, 1e-15);
    expect_near(c, "D(x2,y1)", bayesian_suite(printed).at(MeasureId::D).value, -0.025, 1e-9);

    const JointTable covid = pool(*find_builtin("covid_cfr_by_age")->stratified);
    const double avg_cfr_pct = 0.97;
    expect_near(c, "CFR D(x1,y1) in percent", covid.p_y1_given_x1 * 100.0 - avg_cfr_pct, 0.07,
                0.01);
    expect_near(c, "CFR D(x2,y1) in percent", covid.p_y1_given_x0 * 100.0 - avg_cfr_pct, -0.14,
                0.01,
                "published -0.14 contradicts its own inputs: 0.73 - 0.97 = -0.24; no "
                "computation reproduces it");
    return c;
}

Criterion criterion_7() {
    Criterion c{7, "disbelief channel reconstruction", {}};
    const JointTable channel =
        channel_from_disbelief(TruthAssignment{0.94, 0.77, BeliefOrientation::PositiveBelief});
    expect_near(c, "P(y1|x1) from b' = (0.94, 0.77)", channel.p_y1_given_x1, 0.8320, 0.01);
    expect_near(c, "P(y0|x0) from b' = (0.94, 0.77)", 1.0 - channel.p_y1_given_x0, 0.2182, 0.01);

    Gen gen(71);
    int failures = 0;
    for (int i = 0; i < 1000; ++i) {
        const double cc1 = gen.in(0.001, 0.999);
        const double cc0 = gen.in(0.001, 0.999);
        const JointTable t = channel_from_disbelief(
            TruthAssignment{1.0 - cc1, 1.0 - cc0, BeliefOrientation::PositiveBelief});
        const double rec1 = causal_confirmation_cc(t).value;
        const double rec0 = causal_confirmation_cc(t.complement()).value;
        if (std::abs(rec1 - cc1) > 1e-9 || std::abs(rec0 - cc0) > 1e-9) ++failures;
    }
    expect_true(c, "Cc -> channel -> Cc round trip within 1e-9, 1000 fuzzed pairs",
                failures == 0, failures == 0 ? "" : std::to_string(failures) + " failures");
    return c;
}

Criterion criterion_8() {
    Criterion c{8, "cross-entropy optimizer against the closed form", {}};
    Gen gen(81);
    int argmin_failures = 0;
    int matching_failures = 0;
    int entropy_failures = 0;
    for (int i = 0; i < 1000; ++i) {
        const double px = gen.in(0.02, 0.98);
        const double q = gen.in(0.001, 0.999);
        const BinaryDistribution prior{px, 1.0 - px};
        const BinaryDistribution posterior{q, 1.0 - q};

        const double m1 = posterior.p1 / prior.p1;
        const double m0 = posterior.p0 / prior.p0;
        const double closed_b = m1 >= m0 ? m0 / m1 : m1 / m0;
        const auto orientation = m1 >= m0 ? BeliefOrientation::PositiveBelief
                                          : BeliefOrientation::NegativeBelief;

        const auto numeric = optimize_disbelief(prior, posterior);
        if (std::abs(numeric.b1_prime - closed_b) > 1e-4) ++argmin_failures;
        const double h_closed =
            disbelief_cross_entropy(orientation, closed_b, prior, posterior);
        if (numeric.cross_entropy_bits > h_closed + 1e-9) ++entropy_failures;

        const auto eval =
            evaluate(TruthAssignment{closed_b, 1.0, orientation}, prior, posterior);
        if (std::abs(eval.posterior.p1 - posterior.p1) > 1e-9 ||
            std::abs(eval.posterior.p0 - posterior.p0) > 1e-9) {
            ++matching_failures;
        }
    }
    expect_true(c, "numeric argmin within 1e-4 of the closed form, 1000 fuzzed instances",
                argmin_failures == 0);
    expect_true(c, "achieved cross-entropy within 1e-9 of the closed-form optimum",
                entropy_failures == 0);
    expect_true(c, "matching condition P(x|theta1) = P(x|y1) within 1e-9 at the optimum",
                matching_failures == 0);
    return c;
}

Criterion criterion_9() {
    Criterion c{9, "fuzzed property suites (1000 cases each)", {}};
    {
        Gen gen(91);
        int failures = 0;
        for (int i = 0; i < 1000; ++i) {
            const double a = gen.conditional();
            const double b = gen.conditional();
            if (a == 0.0 && b == 0.0) continue;
            if (causal_confirmation_cc(make_joint_table(a, b)).value !=
                -causal_confirmation_cc(make_joint_table(b, a)).value) {
                ++failures;
            }
        }
        expect_true(c, "cause symmetry of Cc is exact", failures == 0);
    }
    {
        Gen gen(92);
        int failures = 0;
        for (int i = 0; i < 1000; ++i) {
            const JointTable t = make_joint_table(gen.conditional(), gen.conditional());
            if (causal_confirmation_ce(t).value != -causal_confirmation_ce(t, true).value) {
                ++failures;
            }
        }
        expect_true(c, "outcome symmetry of Ce is exact", failures == 0);
    }
    {
        Gen gen(93);
        int failures = 0;
        for (int i = 0; i < 1000; ++i) {
            const JointTable t =
                make_joint_table(gen.conditional(), gen.conditional(), gen.in(0.01, 0.99));
            const auto suite = bayesian_suite(t);
            for (MeasureId id :
                 {MeasureId::Z, MeasureId::Fko, MeasureId::BStar, MeasureId::CStar}) {
                const auto& r = suite.at(id);
                if (r.defined && (r.value < -1.0 || r.value > 1.0)) ++failures;
            }
            const auto cc = causal_confirmation_cc(t);
            if (cc.defined && (cc.value < -1.0 || cc.value > 1.0)) ++failures;
            const auto ce = causal_confirmation_ce(t);
            if (ce.value < -1.0 || ce.value > 1.0) ++failures;
            const auto or_n = odds_measures(t).or_n;
            if (or_n.defined && (or_n.value < -1.0 || or_n.value > 1.0)) ++failures;
        }
        expect_true(c, "normalization bounds for Cc/Ce/b*/c*/Z/F/OR_N", failures == 0);
    }
    {
        Gen gen(94);
        int failures = 0;
        for (int i = 0; i < 1000; ++i) {
            const double c1 = gen.in(0.01, 0.99);
            double c0 = gen.in(0.01, 0.99);
            if (c1 == c0) c0 = c0 / 2.0 + 0.001;
            const JointTable ta = make_joint_table(c1, c0, gen.in(0.05, 0.45));
            const JointTable tb = make_joint_table(c1, c0, gen.in(0.55, 0.95));
            const auto ra = risk_measures(ta);
            const auto rb = risk_measures(tb);
            const bool invariant =
                causal_confirmation_cc(ta).value == causal_confirmation_cc(tb).value &&
                ra.pd.value == rb.pd.value && ra.rr.value == rb.rr.value &&
                ra.rd.value == rb.rd.value && ra.delta_star.value == rb.delta_star.value;
            const bool d_moves = std::abs(bayesian_suite(ta).at(MeasureId::D).value -
                                          bayesian_suite(tb).at(MeasureId::D).value) > 0.0;
            if (!invariant || !d_moves) ++failures;
        }
        expect_true(c, "Cc/Pd/RR/RD/Delta*P ignore the cause marginal, D does not",
                    failures == 0);
    }
    {
        Gen gen(95);
        int failures = 0;
        for (int i = 0; i < 1000; ++i) {
            const JointTable t =
                make_joint_table(gen.conditional(), gen.conditional(), gen.in(0.01, 0.99));
            const auto suite = bayesian_suite(t);
            const double d = suite.at(MeasureId::D).value;
            const double s = suite.at(MeasureId::S).value;
            if (std::abs(d - (1.0 - t.p_x1()) * s) > 1e-12) ++failures;
        }
        expect_true(c, "D = P(e0) * S within 1e-12", failures == 0);
    }
    {
        Gen gen(96);
        int failures = 0;
        for (int i = 0; i < 1000; ++i) {
            const int n_groups = 2 + gen.upto(3);
            std::vector<RateRow> rows;
            std::vector<double> w0(n_groups), w1(n_groups);
            double s0 = 0, s1 = 0;
            for (int g = 0; g < n_groups; ++g) {
                w0[g] = gen.in(0.05, 1.0);
                w1[g] = gen.in(0.05, 1.0);
                s0 += w0[g];
                s1 += w1[g];
            }
            for (int g = 0; g < n_groups; ++g) {
                const std::string label = "g" + std::to_string(g);
                const double base = gen.in(0.05, 0.85);
                rows.push_back(RateRow{label, "x0", base, w0[g] / s0});
                rows.push_back(RateRow{label, "x1", base + gen.in(0.01, 0.1), w1[g] / s1});
            }
            const auto ds = build_from_rates(rows);
            if (detect_simpson(ds).adjusted_direction != 1) ++failures;
        }
        expect_true(c, "confounder adjustment preserves unanimous group directions",
                    failures == 0);
    }
    {
        // Treatment-randomized joints: the stratifier is independent of the
        // cause, so the unanimous direction fixes the sign of P(y1|x1)-P(y1).
        Gen gen(97);
        int failures = 0;
        for (int i = 0; i < 1000; ++i) {
            const int n_groups = 2 + gen.upto(3);
            std::vector<RateRow> rows;
            std::vector<double> w(n_groups);
            double sum = 0;
            for (int g = 0; g < n_groups; ++g) {
                w[g] = gen.in(0.05, 1.0);
                sum += w[g];
            }
            for (int g = 0; g < n_groups; ++g) {
                const std::string label = "g" + std::to_string(g);
                const double base = gen.in(0.05, 0.85);
                rows.push_back(RateRow{label, "x0", base, w[g] / sum});
                rows.push_back(RateRow{label, "x1", base + gen.in(0.01, 0.1), w[g] / sum});
            }
            const auto ds = build_from_rates(rows);
            const JointTable pooled = pool(ds);
            const double px1 = gen.in(0.01, 0.99);
            const double p_y1 =
                px1 * pooled.p_y1_given_x1 + (1.0 - px1) * pooled.p_y1_given_x0;
            if (!(pooled.p_y1_given_x1 - p_y1 > 0.0)) ++failures;
        }
        expect_true(c, "unanimity fixes the sign of P(y1|x1) - P(y1) when the stratifier is "
                       "independent of the cause",
                    failures == 0);
    }
    return c;
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        criterion_1(), criterion_2(), criterion_3(), criterion_4(), criterion_5(),
        criterion_6(), criterion_7(), criterion_8(), criterion_9(),
    };

    int failed = 0;
    for (const auto& c : criteria) {
        std::printf("[%d] %-52s %s\n", c.id, c.title.c_str(), c.pass() ? "PASS" : "FAIL");
        for (const auto& s : c.subs) {
            if (!s.pass || !s.detail.empty()) {
                std::printf("      %-4s %s%s%s\n", s.pass ? "ok" : "FAIL", s.name.c_str(),
                            s.detail.empty() ? "" : ": ", s.detail.c_str());
            }
        }
        if (!c.pass()) ++failed;
    }
    std::printf("%zu criteria, %d failed\n", criteria.size(), failed);
    return failed == 0 ? 0 : 1;
}
