#include "ccm/errors.hpp"

namespace ccm {

const char* error_code_name(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::DuplicateCell: return "DuplicateCell";
        case ErrorCode::MissingCell: return "MissingCell";
        case ErrorCode::InvalidCount: return "InvalidCount";
        case ErrorCode::WeightSumViolation: return "WeightSumViolation";
        case ErrorCode::RateOutOfRange: return "RateOutOfRange";
        case ErrorCode::InvalidProbability: return "InvalidProbability";
        case ErrorCode::MissingGroupPrior: return "MissingGroupPrior";
        case ErrorCode::UnnormalizedDistribution: return "UnnormalizedDistribution";
        case ErrorCode::DegenerateOutcome: return "DegenerateOutcome";
        case ErrorCode::DegenerateMarginal: return "DegenerateMarginal";
        case ErrorCode::ZeroLogicalProbability: return "ZeroLogicalProbability";
        case ErrorCode::DegeneratePrior: return "DegeneratePrior";
        case ErrorCode::DegenerateChannel: return "DegenerateChannel";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::SchemaError: return "SchemaError";
        case ErrorCode::UnknownDataset: return "UnknownDataset";
    }
    return "UnknownError";
}

std::string Error::make_message(ErrorCode code, const std::string& message, int line) {
    std::string out = error_code_name(code);
    if (line > 0) {
        out += " (line ";
        out += std::to_string(line);
        out += ")";
    }
    out += ": ";
    out += message;
    return out;
}

}  // namespace ccm
