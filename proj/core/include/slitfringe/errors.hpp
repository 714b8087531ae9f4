#pragma once

#include <stdexcept>
#include <string>

namespace slitfringe {

/// Invalid argument value (non-finite input, out-of-range time, ...).
struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Structurally invalid parameter set (e.g. sigma <= 0).
struct ParameterError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Shift not commensurate with the grid, or grid mismatch.
struct GridError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A truncation parameter would exceed its hard cap.
struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Not enough data to compute the requested statistic.
struct InsufficientDataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Configuration parse/validation failure.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace slitfringe
