#include "qthermo/errors.hpp"

namespace qthermo {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::NotHermitian: return "NotHermitian";
        case ErrorCode::NoConvergence: return "NoConvergence";
        case ErrorCode::DomainError: return "DomainError";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::InvalidDimension: return "InvalidDimension";
        case ErrorCode::InvalidConfig: return "InvalidConfig";
        case ErrorCode::InvalidState: return "InvalidState";
        case ErrorCode::NonPositiveTemperature: return "NonPositiveTemperature";
        case ErrorCode::InvalidStep: return "InvalidStep";
        case ErrorCode::DegenerateVariance: return "DegenerateVariance";
        case ErrorCode::NonUniformGrid: return "NonUniformGrid";
        case ErrorCode::MultiModeState: return "MultiModeState";
        case ErrorCode::CutoffTooSmall: return "CutoffTooSmall";
        case ErrorCode::ConfigError: return "ConfigError";
        case ErrorCode::IoError: return "IoError";
    }
    return "Unknown";
}

} // namespace qthermo
