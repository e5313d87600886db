#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qcensus {

// Thrown when an operand violates a documented precondition (caller bug).
struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Inversion of a non-unit.
struct NonUnitError : DomainError {
    using DomainError::DomainError;
};

// Mixed-precision operands where a single working precision is required.
struct PrecisionMismatch : std::logic_error {
    using std::logic_error::logic_error;
};

// Operands built over distinct algebra configurations.
struct ConfigMismatch : std::logic_error {
    using std::logic_error::logic_error;
};

// An internal consistency check failed; signals an arithmetic bug, never user error.
struct InternalCheckFailure : std::logic_error {
    using std::logic_error::logic_error;
};

// Request exceeds the supported problem size; carries the resource estimate.
struct InfeasibleError : std::runtime_error {
    std::uint64_t estimate_bytes;
    InfeasibleError(const std::string& msg, std::uint64_t estimate)
        : std::runtime_error(msg), estimate_bytes(estimate) {}
};

}  // namespace qcensus
