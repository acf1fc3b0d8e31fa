#include <doctest.h>

#include "ccm/tables.hpp"

using namespace ccm;

namespace {

std::vector<CountRow> kidney_rows() {
    return {
        {"small", "x1", 235, 270},
        {"small", "x2", 81, 87},
        {"large", "x1", 55, 80},
        {"large", "x2", 192, 263},
    };
}

}  // namespace

TEST_SUITE("tables") {

TEST_CASE("build_from_counts reproduces the stone-size table") {
    const auto ds = build_from_counts(kidney_rows());
    CHECK(ds.schema() == Schema::Counts);
    CHECK(ds.reference_cause() == "x1");
    CHECK(ds.focus_cause() == "x2");
    CHECK(ds.group_count() == 2);

    // Counts are kept exact; derived ratios reproduce successes/total bit
    // for bit.
    CHECK(ds.rate(0, 0) == 235.0 / 270.0);
    CHECK(ds.rate(0, 0) == doctest::Approx(0.87).epsilon(0.01));
    CHECK(ds.rate(0, 1) == 81.0 / 87.0);
    CHECK(ds.group_prior(0) == 357.0 / 700.0);
    CHECK(ds.group_prior(0) == doctest::Approx(0.51));
    CHECK(ds.group_prior(1) == doctest::Approx(0.49));

    // P(g|x) from per-cause totals.
    CHECK(ds.weight_given_cause(0, 0) == 270.0 / 350.0);
    CHECK(ds.weight_given_cause(0, 1) == 87.0 / 350.0);
    CHECK(ds.cause_marginal(0) == doctest::Approx(0.5));
    CHECK(ds.cause_marginal(1) == doctest::Approx(0.5));
}

TEST_CASE("single group with equal cells degenerates cleanly") {
    const auto ds = build_from_counts({{"g", "x1", 5, 10}, {"g", "x2", 5, 10}});
    CHECK(ds.group_count() == 1);
    CHECK(ds.group_prior(0) == doctest::Approx(1.0));
    CHECK(ds.rate(0, 0) == ds.rate(0, 1));
}

TEST_CASE("count validation") {
    CHECK_THROWS_WITH_AS(build_from_counts({{"g", "x1", 5, 4}, {"g", "x2", 1, 4}}),
                         doctest::Contains("InvalidCount"), Error);
    CHECK_THROWS_AS(build_from_counts({{"g", "x1", 1, 0}, {"g", "x2", 1, 4}}), Error);
    CHECK_THROWS_WITH_AS(build_from_counts({{"g", "x1", 1, 4},
                                            {"g", "x1", 2, 4},
                                            {"g", "x2", 1, 4}}),
                         doctest::Contains("DuplicateCell"), Error);
    CHECK_THROWS_WITH_AS(build_from_counts({{"a", "x1", 1, 4},
                                            {"a", "x2", 1, 4},
                                            {"b", "x1", 1, 4}}),
                         doctest::Contains("MissingCell"), Error);
    CHECK_THROWS_WITH_AS(build_from_counts({{"g", "x1", 1, 4},
                                            {"g", "x2", 1, 4},
                                            {"g", "x3", 1, 4}}),
                         doctest::Contains("SchemaError"), Error);
}

TEST_CASE("build_from_rates accepts valid weights and rejects bad ones") {
    const std::vector<RateRow> rows = {
        {"young", "x0", 0.1, 0.6},
        {"young", "x1", 0.2, 0.4},
        {"old", "x0", 0.3, 0.4},
        {"old", "x1", 0.5, 0.6},
    };
    const auto ds = build_from_rates(rows);
    CHECK(ds.schema() == Schema::Rates);
    // Default P(g) averages the per-cause weights at even cause marginals.
    CHECK(ds.group_prior(0) == doctest::Approx(0.5));
    CHECK(ds.group_prior(1) == doctest::Approx(0.5));
    CHECK_FALSE(ds.has_explicit_prior());

    SUBCASE("explicit prior") {
        const std::map<std::string, double> prior = {{"young", 0.7}, {"old", 0.3}};
        const auto with_prior = build_from_rates(rows, &prior);
        CHECK(with_prior.has_explicit_prior());
        CHECK(with_prior.group_prior(0) == doctest::Approx(0.7));
    }
    SUBCASE("prior must cover every group and sum to 1") {
        const std::map<std::string, double> missing = {{"young", 1.0}};
        CHECK_THROWS_WITH_AS(build_from_rates(rows, &missing),
                             doctest::Contains("MissingGroupPrior"), Error);
        const std::map<std::string, double> lopsided = {{"young", 0.7}, {"old", 0.7}};
        CHECK_THROWS_WITH_AS(build_from_rates(rows, &lopsided),
                             doctest::Contains("WeightSumViolation"), Error);
    }
}

TEST_CASE("one group with weight 1 is a valid rates dataset") {
    const auto ds = build_from_rates({{"g", "x0", 0.25, 1.0}, {"g", "x1", 0.75, 1.0}});
    CHECK(ds.group_prior(0) == doctest::Approx(1.0));
}

TEST_CASE("rate and weight violations") {
    CHECK_THROWS_WITH_AS(
        build_from_rates({{"g", "x0", 1.5, 1.0}, {"g", "x1", 0.5, 1.0}}),
        doctest::Contains("RateOutOfRange"), Error);
    // Weights summing to 0.8.
    CHECK_THROWS_WITH_AS(
        build_from_rates({{"a", "x0", 0.1, 0.4}, {"a", "x1", 0.1, 0.5},
                          {"b", "x0", 0.1, 0.4}, {"b", "x1", 0.1, 0.5}}),
        doctest::Contains("WeightSumViolation"), Error);
}

TEST_CASE("pool computes the observed conditional rates") {
    const auto ds = build_from_counts(kidney_rows());
    const JointTable t = pool(ds);
    CHECK(t.p_y1_given_x0 == doctest::Approx(290.0 / 350.0));  // x1
    CHECK(t.p_y1_given_x0 == doctest::Approx(0.83).epsilon(0.01));
    CHECK(t.p_y1_given_x1 == doctest::Approx(0.78));  // x2
    CHECK(t.label_x1 == "x2");
    CHECK(t.label_x0 == "x1");
    CHECK(t.p_x1() == doctest::Approx(0.5));

    SUBCASE("one group pools to the group rate") {
        const auto single = build_from_counts({{"g", "x1", 3, 10}, {"g", "x2", 7, 10}});
        const JointTable st = pool(single);
        CHECK(st.p_y1_given_x0 == doctest::Approx(0.3));
        CHECK(st.p_y1_given_x1 == doctest::Approx(0.7));
    }
}

TEST_CASE("P(g) from counts equals sum_x P(x) P(g|x)") {
    const auto ds = build_from_counts(kidney_rows());
    for (std::size_t gi = 0; gi < ds.group_count(); ++gi) {
        const double via_marginals = ds.cause_marginal(0) * ds.weight_given_cause(gi, 0) +
                                     ds.cause_marginal(1) * ds.weight_given_cause(gi, 1);
        CHECK(ds.group_prior(gi) == doctest::Approx(via_marginals).epsilon(1e-12));
    }
}

TEST_CASE("joint table derived quantities") {
    const JointTable t = make_joint_table(0.9, 0.8, 0.5);
    CHECK(t.p_y1() == doctest::Approx(0.85));
    CHECK(t.joint_x1_y1() == doctest::Approx(0.45));
    CHECK(t.joint_x0_y0() == doctest::Approx(0.1));
    CHECK(t.joint_x1_y1() + t.joint_x1_y0() + t.joint_x0_y1() + t.joint_x0_y0() ==
          doctest::Approx(1.0).epsilon(1e-12));

    SUBCASE("default cause marginal is an even split") {
        const JointTable bare = make_joint_table(0.9, 0.8);
        CHECK(bare.p_x1() == 0.5);
    }
    SUBCASE("validation") {
        CHECK_THROWS_AS(make_joint_table(1.2, 0.5), Error);
        CHECK_THROWS_AS(make_joint_table(0.5, -0.1), Error);
        CHECK_THROWS_AS(make_joint_table(0.5, 0.5, 1.5), Error);
    }
}

TEST_CASE("complement swaps causes and negates the outcome") {
    const JointTable t = make_joint_table(0.9, 0.8, 0.3, "x2", "x1", "y1");
    const JointTable c = t.complement();
    CHECK(c.p_y1_given_x1 == doctest::Approx(0.2));  // P(y0|x1)
    CHECK(c.p_y1_given_x0 == doctest::Approx(0.1));  // P(y0|x2)
    CHECK(c.p_x1() == doctest::Approx(0.7));
    CHECK(c.label_x1 == "x1");
    CHECK(c.label_x0 == "x2");
    CHECK(c.label_y1 == "y0");
    CHECK(negate_label("success") == "not-success");
    CHECK(negate_label("not-success") == "success");
}

TEST_CASE("transpose inverts the association") {
    const JointTable t = make_joint_table(0.9, 0.8, 0.5);
    const JointTable inv = t.transpose();
    CHECK(inv.p_y1_given_x1 == doctest::Approx(0.45 / 0.85));  // P(x1|y1)
    CHECK(inv.p_y1_given_x0 == doctest::Approx(0.05 / 0.15));  // P(x1|y0)
    CHECK(inv.p_x1() == doctest::Approx(0.85));

    const JointTable degenerate = make_joint_table(1.0, 1.0, 0.5);
    CHECK_THROWS_WITH_AS(degenerate.transpose(), doctest::Contains("DegenerateOutcome"), Error);
}

}  // TEST_SUITE
