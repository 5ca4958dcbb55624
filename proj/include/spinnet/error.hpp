#pragma once

#include <stdexcept>
#include <string>

namespace spinnet {

/// Bad call: malformed labels, length mismatches, out-of-range sizes.
struct ArgumentError : std::runtime_error {
    explicit ArgumentError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Mathematically undefined request (singular denominator, |cos| > 1, ...).
struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Instance too large for the exhaustive algorithms used here.
struct CapabilityError : ArgumentError {
    explicit CapabilityError(const std::string& msg) : ArgumentError(msg) {}
};

/// Rejection sampling exceeded its attempt budget.
struct SamplingError : std::runtime_error {
    explicit SamplingError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace spinnet
