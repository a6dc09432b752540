#pragma once

#include <stdexcept>
#include <string>

namespace tropitor {

// Input that fails structural preconditions (disconnected graph, bad basis, ...).
struct StructuralError : std::runtime_error {
    explicit StructuralError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed external input (JSON, unknown ids, unparsable rationals).
struct InputError : std::runtime_error {
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// Request exceeds a configured desk-scale bound.
struct CapacityError : std::runtime_error {
    explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace tropitor
