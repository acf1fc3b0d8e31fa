#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ccm {

// One recomputed reference value. `expected` is the pinned target with its
// tolerance; `published` records a differing printed source figure, with
// `accept_band` the documented acceptance band around it.
struct VerifyCheck {
    std::string dataset;
    std::string name;
    double computed = 0.0;
    double expected = 0.0;
    double tolerance = 0.0;
    std::optional<double> published;
    std::optional<std::pair<double, double>> accept_band;
    std::string note;

    bool within_tolerance() const;
    bool within_band() const;  // true when no band is set
    bool ok() const { return within_tolerance() && within_band(); }

    // "pass", "pass (widened tolerance)" or "FAIL".
    std::string status() const;
};

// Recomputes the bundled reference values for one dataset (or all).
// Errors: UnknownDataset.
std::vector<VerifyCheck> verify_dataset(std::string_view name);
std::vector<VerifyCheck> verify_all();

std::string format_check_line(const VerifyCheck& check);

}  // namespace ccm
