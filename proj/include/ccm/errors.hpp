#pragma once

#include <stdexcept>
#include <string>

namespace ccm {

enum class ErrorCode {
    DuplicateCell,
    MissingCell,
    InvalidCount,
    WeightSumViolation,
    RateOutOfRange,
    InvalidProbability,
    MissingGroupPrior,
    UnnormalizedDistribution,
    DegenerateOutcome,
    DegenerateMarginal,
    ZeroLogicalProbability,
    DegeneratePrior,
    DegenerateChannel,
    ParseError,
    SchemaError,
    UnknownDataset,
};

const char* error_code_name(ErrorCode code) noexcept;

// Single exception type for the whole library. Parse errors carry a
// 1-based line number (0 = not applicable).
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message, int line = 0)
        : std::runtime_error(make_message(code, message, line)),
          code_(code),
          line_(line) {}

    ErrorCode code() const noexcept { return code_; }
    int line() const noexcept { return line_; }

private:
    static std::string make_message(ErrorCode code, const std::string& message, int line);

    ErrorCode code_;
    int line_;
};

}  // namespace ccm
