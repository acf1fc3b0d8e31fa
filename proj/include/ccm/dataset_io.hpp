#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "ccm/tables.hpp"

namespace ccm {

// CSV grammar: UTF-8, comma-separated, decimal point, no exponent notation.
// The first non-comment line must be exactly one of the two headers:
//   group,cause,successes,total     (Counts schema)
//   group,cause,rate,weight         (Rates schema)
// Lines starting with '#' are comments or directives:
//   #prior,<group>,<probability>    explicit P(g) for one group
//   #outcome,<label>                outcome display label (default "y1")

// Errors: ParseError (with line number), SchemaError, plus the construction
// errors of the tables module.
StratifiedDataset parse_dataset_csv(std::string_view text, std::string_view source_name = "csv");

StratifiedDataset load_dataset(const std::filesystem::path& path);

// Inverse of parse_dataset_csv: parse(render(d)) == d, including weights
// (written with shortest round-tripping fixed notation).
std::string render_dataset_csv(const StratifiedDataset& dataset);

// Strict fixed-notation decimal parser used by the CSV loader and the CLI;
// rejects exponents, hex, infinities and trailing junk.
std::optional<double> parse_plain_double(std::string_view text);

std::optional<std::int64_t> parse_plain_int(std::string_view text);

// Shortest fixed-notation representation that parses back to the same value.
std::string format_full(double value);

}  // namespace ccm
