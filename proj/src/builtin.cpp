#include "ccm/builtin.hpp"

#include <array>
#include <map>

namespace ccm {

namespace {

StratifiedDataset make_kidney_stones() {
    return build_from_counts({
        {"small", "x1", 235, 270},
        {"small", "x2", 81, 87},
        {"large", "x1", 55, 80},
        {"large", "x2", 192, 263},
    });
}

// Age-stratified CFR digest. The published digest's weight columns sum to
// 0.9999 (P(g|x1)), 1.0001 (P(g|x2)) and 1.002 (P(g)) at printed precision;
// each column is renormalized by its own sum so the distributions are exact.
// Scale-free quantities (Cc, Pd) are unaffected.
StratifiedDataset make_covid_cfr_by_age() {
    static const std::array<const char*, 11> ages = {
        "0-4",   "5-11",  "12-15", "16-17", "18-29", "30-39",
        "40-49", "50-64", "65-74", "75-84", "85+",
    };
    // Non-Hispanic white (x1): CFR and P(g|x1).
    static const std::array<double, 11> cfr_white = {
        0.0002, 0.0001, 0.0001, 0.0001, 0.0004, 0.0011, 0.0030, 0.0102, 0.0333, 0.0762, 0.1606,
    };
    static const std::array<double, 11> w_white = {
        0.0349, 0.0659, 0.0458, 0.0268, 0.2081, 0.1681, 0.1427, 0.1843, 0.0704, 0.0356, 0.0173,
    };
    // Other races (x2): CFR and P(g|x2).
    static const std::array<double, 11> cfr_other = {
        0.0002, 0.0001, 0.0001, 0.0002, 0.0006, 0.0019, 0.0048, 0.0144, 0.0457, 0.0938, 0.1751,
    };
    static const std::array<double, 11> w_other = {
        0.0480, 0.0907, 0.0578, 0.0307, 0.2388, 0.1883, 0.1493, 0.1389, 0.0373, 0.0144, 0.0059,
    };
    static const std::array<double, 11> prior = {
        0.041, 0.078, 0.052, 0.029, 0.223, 0.178, 0.146, 0.163, 0.055, 0.025, 0.012,
    };

    double sum_white = 0.0, sum_other = 0.0, sum_prior = 0.0;
    for (std::size_t i = 0; i < ages.size(); ++i) {
        sum_white += w_white[i];
        sum_other += w_other[i];
        sum_prior += prior[i];
    }

    std::vector<RateRow> rows;
    std::map<std::string, double> prior_map;
    for (std::size_t i = 0; i < ages.size(); ++i) {
        // Reference cause x2 listed first: the reported rule is x1/x2 => y1.
        rows.push_back(RateRow{ages[i], "x2", cfr_other[i], w_other[i] / sum_other});
        rows.push_back(RateRow{ages[i], "x1", cfr_white[i], w_white[i] / sum_white});
        prior_map[ages[i]] = prior[i] / sum_prior;
    }
    return build_from_rates(rows, &prior_map);
}

std::vector<BuiltinDataset> make_catalog() {
    std::vector<BuiltinDataset> catalog;

    {
        BuiltinDataset d;
        d.name = "kidney_stones";
        d.description =
            "Two kidney-stone treatments (x1, x2) stratified by stone size; "
            "success counts per subgroup, 700 patients total.";
        d.stratified = make_kidney_stones();
        d.source_note =
            "Classic treatment-comparison data (open surgery vs percutaneous "
            "nephrolithotomy); stone size acts as a confounder.";
        catalog.push_back(std::move(d));
    }

    {
        BuiltinDataset d;
        d.name = "covid_cfr_by_age";
        d.description =
            "COVID-19 case fatality rates of Non-Hispanic whites (x1) vs other "
            "races (x2) across 11 age groups, with explicit age distribution P(g).";
        d.stratified = make_covid_cfr_by_age();
        d.source_note =
            "Digest of US CDC demographic data (reported cases through July 2022). "
            "Weight columns renormalized from printed precision (sums 0.9999, "
            "1.0001, 1.002). The published per-group share of x1 (percent values "
            "like 44.200) is informational and not used here.";
        catalog.push_back(std::move(d));
    }

    {
        BuiltinDataset d;
        d.name = "vaccine_rates";
        d.description =
            "Weekly COVID-19 cases and deaths per 100k among vaccinated (x1) vs "
            "unvaccinated (x0) people ages 5+, stored as proportions.";
        d.slices.push_back(
            {"cases", make_joint_table(189.5 / 100000.0, 512.6 / 100000.0, std::nullopt, "x1",
                                       "x0", "y1")});
        d.slices.push_back(
            {"deaths", make_joint_table(0.34 / 100000.0, 1.89 / 100000.0, std::nullopt, "x1",
                                        "x0", "y1")});
        d.source_note =
            "US CDC rates by vaccination status, week of June 20-26, 2022 "
            "(512.6 vs 189.5 cases, 1.89 vs 0.34 deaths per 100k).";
        catalog.push_back(std::move(d));
    }

    {
        BuiltinDataset d;
        d.name = "mortality_covid";
        d.description =
            "Annual mortality rate from common causes alone (x0) vs common causes "
            "plus COVID-19 (x1), for unvaccinated and vaccinated people.";
        d.slices.push_back(
            {"unvaccinated", make_joint_table(0.014, 0.013, std::nullopt, "x1", "x0", "y1")});
        d.slices.push_back(
            {"vaccinated", make_joint_table(0.01318, 0.013, std::nullopt, "x1", "x0", "y1")});
        d.source_note =
            "Baseline 0.013 = 1/79 (US life expectancy); COVID-19 adds 0.001 "
            "(unvaccinated) or 0.00018 (vaccinated) under independent composition "
            "a + b - a*b.";
        catalog.push_back(std::move(d));
    }

    {
        BuiltinDataset d;
        d.name = "pd_vs_deltastar";
        d.description =
            "Two flat tables contrasting Pd with Delta*P: (0.9, 0.8) where Pd is "
            "small, and (0.2, 0) where no counterexample exists.";
        d.slices.push_back(
            {"no-big-difference", make_joint_table(0.9, 0.8, std::nullopt, "x1", "x0", "y1")});
        d.slices.push_back(
            {"no-counterexample", make_joint_table(0.2, 0.0, std::nullopt, "x1", "x0", "y1")});
        d.source_note = "Constructed comparison pair.";
        catalog.push_back(std::move(d));
    }

    return catalog;
}

}  // namespace

const std::vector<BuiltinDataset>& builtin_datasets() {
    static const std::vector<BuiltinDataset> catalog = make_catalog();
    return catalog;
}

const BuiltinDataset* find_builtin(std::string_view name) {
    for (const auto& d : builtin_datasets()) {
        if (d.name == name) return &d;
    }
    return nullptr;
}

double combined_independent_rate(double a, double b) {
    return a + b - a * b;
}

}  // namespace ccm
