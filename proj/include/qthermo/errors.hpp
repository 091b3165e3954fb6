// Error kinds shared by every qthermo module

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qthermo {

enum class ErrorCode {
    NotHermitian,
    NoConvergence,
    DomainError,
    DimensionMismatch,
    InvalidDimension,
    InvalidConfig,
    InvalidState,
    NonPositiveTemperature,
    InvalidStep,
    DegenerateVariance,
    NonUniformGrid,
    MultiModeState,
    CutoffTooSmall,
    ConfigError,
    IoError,
};

// Stable identifier used in CSV error_code cells and diagnostics.
std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace qthermo
