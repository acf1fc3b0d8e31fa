#include "ccm/verify.hpp"

#include <cmath>
#include <cstdio>

#include "ccm/adjust.hpp"
#include "ccm/builtin.hpp"
#include "ccm/measures.hpp"
#include "ccm/tables.hpp"

namespace ccm {

namespace {

VerifyCheck check(std::string dataset, std::string name, double computed, double expected,
                  double tolerance, std::string note = {}) {
    VerifyCheck c;
    c.dataset = std::move(dataset);
    c.name = std::move(name);
    c.computed = computed;
    c.expected = expected;
    c.tolerance = tolerance;
    c.note = std::move(note);
    return c;
}

std::vector<VerifyCheck> kidney_checks() {
    const auto& ds = *find_builtin("kidney_stones")->stratified;
    const JointTable observed = pool(ds);
    const DoTable adjusted = do_adjust(ds, CausalRole::Confounder);
    const ParadoxReport paradox = detect_simpson(ds);

    std::vector<VerifyCheck> out;
    const std::string n = "kidney_stones";
    out.push_back(check(n, "P(y1|x1)", observed.p_y1_given_x0, 0.83, 0.005));
    out.push_back(check(n, "P(y1|x2)", observed.p_y1_given_x1, 0.78, 0.005));
    out.push_back(check(n, "P(y1|do(x1))", adjusted.p_y1_do_x0, 0.78, 0.005));
    out.push_back(check(n, "P(y1|do(x2))", adjusted.p_y1_do_x1, 0.83, 0.005));
    out.push_back(check(n, "P(y0|do(x1))", 1.0 - adjusted.p_y1_do_x0, 0.22, 0.005));
    out.push_back(check(n, "P(y0|do(x2))", 1.0 - adjusted.p_y1_do_x1, 0.17, 0.005));

    const JointTable adjusted_joint = to_joint(adjusted, observed.p_x1());
    out.push_back(check(n, "Cc(x2/x1 => y1)", causal_confirmation_cc(adjusted_joint).value, 0.06,
                        0.005));
    out.push_back(check(n, "Cc(x1/x2 => y0)",
                        causal_confirmation_cc(to_joint(adjusted.complement(),
                                                        1.0 - observed.p_x1()))
                            .value,
                        0.23, 0.01));

    // Observed-row relative difference (R-1)/R, negative before adjustment.
    const double r_obs = observed.p_y1_given_x1 / observed.p_y1_given_x0;
    out.push_back(check(n, "observed (R-1)/R", (r_obs - 1.0) / r_obs, -0.064, 0.005));

    out.push_back(check(n, "paradox_present", paradox.paradox_present ? 1.0 : 0.0, 1.0, 0.0));
    out.push_back(check(n, "adjusted favors x2", paradox.adjusted_direction, 1.0, 0.0));

    // D-measure walkthrough on the published pooled rates at even marginals.
    const JointTable printed = make_joint_table(0.78, 0.83, 0.5, "x2", "x1");
    out.push_back(check(n, "P(y1) at P(x)=0.5", printed.p_y1(), 0.805, 1e-15));
    out.push_back(
        check(n, "D(x2,y1)", bayesian_suite(printed).at(MeasureId::D).value, -0.025, 1e-9));
    return out;
}

std::vector<VerifyCheck> covid_checks() {
    const auto& ds = *find_builtin("covid_cfr_by_age")->stratified;
    const JointTable observed = pool(ds);
    const DoTable adjusted = do_adjust(ds, CausalRole::Confounder);
    const JointTable adjusted_joint = to_joint(adjusted, observed.p_x1());

    std::vector<VerifyCheck> out;
    const std::string n = "covid_cfr_by_age";
    out.push_back(check(n, "CFR% x1 observed", observed.p_y1_given_x1 * 100.0, 1.04, 0.02));
    out.push_back(check(n, "CFR% x2 observed", observed.p_y1_given_x0 * 100.0, 0.73, 0.02));
    out.push_back(check(n, "observed Pd", risk_measures(observed).pd.value, 0.30, 0.01));
    out.push_back(check(n, "CFR% x1 adjusted", adjusted.p_y1_do_x1 * 100.0, 0.80, 0.02));
    out.push_back(check(n, "CFR% x2 adjusted", adjusted.p_y1_do_x0 * 100.0, 1.05, 0.02));
    out.push_back(check(n, "adjusted Pd", risk_measures(adjusted_joint).pd.value, 0.0, 0.0));

    VerifyCheck cc = check(n, "Cc(x1/x2 => y1) adjusted",
                           causal_confirmation_cc(adjusted_joint).value, -0.23, 0.01);
    cc.published = -0.28;
    cc.accept_band = {{-0.30, -0.22}};
    cc.note = "published -0.28 reflects fuller-precision source data; recomputation from the "
              "printed digest gives -0.23";
    out.push_back(cc);

    // D in percent units against the published average CFR of 0.97.
    const double avg_cfr_pct = 0.97;
    out.push_back(check(n, "D(x1,y1) in percent", observed.p_y1_given_x1 * 100.0 - avg_cfr_pct,
                        0.07, 0.01));
    VerifyCheck d2 = check(n, "D(x2,y1) in percent", observed.p_y1_given_x0 * 100.0 - avg_cfr_pct,
                           -0.14, 0.01);
    d2.published = -0.14;
    d2.note = "published -0.14 is inconsistent with its own inputs (0.73 - 0.97 = -0.24); the "
              "recomputed value is shown";
    out.push_back(d2);
    return out;
}

std::vector<VerifyCheck> vaccine_checks() {
    const auto* d = find_builtin("vaccine_rates");
    const JointTable& cases = d->slices[0].table;
    const JointTable& deaths = d->slices[1].table;

    std::vector<VerifyCheck> out;
    const std::string n = "vaccine_rates";
    out.push_back(
        check(n, "Cc(x1/x0 => y1) cases", causal_confirmation_cc(cases).value, -0.63, 0.005));
    VerifyCheck cc = check(n, "Cc(x1/x0 => y1) deaths", causal_confirmation_cc(deaths).value,
                           -0.820, 0.005);
    cc.published = -0.79;
    cc.accept_band = {{-0.83, -0.78}};
    cc.note = "published -0.79 differs from the printed-rate arithmetic (0.34 - 1.89)/1.89 = "
              "-0.820";
    out.push_back(cc);
    return out;
}

std::vector<VerifyCheck> mortality_checks() {
    const auto* d = find_builtin("mortality_covid");
    const JointTable& unvacc = d->slices[0].table;
    const JointTable& vacc = d->slices[1].table;

    std::vector<VerifyCheck> out;
    const std::string n = "mortality_covid";
    out.push_back(
        check(n, "Cc unvaccinated", causal_confirmation_cc(unvacc).value, 0.0714, 0.002));
    out.push_back(check(n, "Cc vaccinated", causal_confirmation_cc(vacc).value, 0.0137, 0.002));
    out.push_back(check(n, "composition 0.013+0.001-0.013*0.001",
                        combined_independent_rate(0.013, 0.001), 0.013987, 1e-6,
                        "prints as 0.014 at source precision"));
    out.push_back(check(n, "composition 0.013+0.00018-0.013*0.00018",
                        combined_independent_rate(0.013, 0.00018), 0.01317766, 1e-6,
                        "prints as 0.01318 at source precision"));
    return out;
}

std::vector<VerifyCheck> pd_deltastar_checks() {
    const auto* d = find_builtin("pd_vs_deltastar");
    const RiskMeasures big = risk_measures(d->slices[0].table);
    const RiskMeasures none = risk_measures(d->slices[1].table);

    std::vector<VerifyCheck> out;
    const std::string n = "pd_vs_deltastar";
    out.push_back(check(n, "Pd(0.9, 0.8)", big.pd.value, 0.11, 0.005));
    out.push_back(check(n, "Delta*P(0.9, 0.8)", big.delta_star.value, 0.5, 1e-9));
    out.push_back(check(n, "Pd(0.2, 0)", none.pd.value, 1.0, 0.0));
    out.push_back(check(n, "Delta*P(0.2, 0)", none.delta_star.value, 0.2, 1e-9));
    return out;
}

}  // namespace

bool VerifyCheck::within_tolerance() const {
    return std::abs(computed - expected) <= tolerance;
}

bool VerifyCheck::within_band() const {
    if (!accept_band) return true;
    return computed >= accept_band->first && computed <= accept_band->second;
}

std::string VerifyCheck::status() const {
    if (!ok()) return "FAIL";
    if (published && std::abs(*published - expected) > tolerance) {
        return "pass (widened tolerance)";
    }
    return "pass";
}

std::vector<VerifyCheck> verify_dataset(std::string_view name) {
    if (name == "kidney_stones") return kidney_checks();
    if (name == "covid_cfr_by_age") return covid_checks();
    if (name == "vaccine_rates") return vaccine_checks();
    if (name == "mortality_covid") return mortality_checks();
    if (name == "pd_vs_deltastar") return pd_deltastar_checks();
    throw Error(ErrorCode::UnknownDataset, "no bundled dataset named '" + std::string(name) + "'");
}

std::vector<VerifyCheck> verify_all() {
    std::vector<VerifyCheck> out;
    for (const auto& d : builtin_datasets()) {
        auto checks = verify_dataset(d.name);
        out.insert(out.end(), checks.begin(), checks.end());
    }
    return out;
}

std::string format_check_line(const VerifyCheck& check) {
    char buf[256];
    std::snprintf(buf, sizeof(buf), "%-18s %-38s computed % .6f expected % .6g +/-%g  %s",
                  check.dataset.c_str(), check.name.c_str(), check.computed, check.expected,
                  check.tolerance, check.status().c_str());
    std::string line = buf;
    if (!check.note.empty()) line += "\n" + std::string(20, ' ') + "note: " + check.note;
    return line;
}

}  // namespace ccm
