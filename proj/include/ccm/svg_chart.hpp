#pragma once

#include <string>

#include "ccm/adjust.hpp"
#include "ccm/tables.hpp"

namespace ccm {

struct GroupChart {
    std::string csv;  // group,cause,rate,weight rows
    std::string svg;  // 800x400 bar chart, byte-deterministic for fixed input
};

// One bar per (group, cause) plus horizontal markers for the pooled and
// do-adjusted rates of each cause.
GroupChart emit_group_chart(const StratifiedDataset& dataset, const DoTable& adjusted);

}  // namespace ccm
