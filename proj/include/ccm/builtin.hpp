#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ccm/tables.hpp"

namespace ccm {

// A flat 2x2 view named within a dataset (e.g. "cases" vs "deaths").
struct FlatSlice {
    std::string name;
    JointTable table;
};

struct BuiltinDataset {
    std::string name;
    std::string description;
    std::optional<StratifiedDataset> stratified;
    std::vector<FlatSlice> slices;  // used when not stratified
    std::string source_note;
};

// Bundled reference datasets: kidney_stones, covid_cfr_by_age,
// vaccine_rates, mortality_covid, pd_vs_deltastar.
const std::vector<BuiltinDataset>& builtin_datasets();

const BuiltinDataset* find_builtin(std::string_view name);

// Union rate of two independent risks: a + b - a*b.
double combined_independent_rate(double a, double b);

}  // namespace ccm
