#pragma once

#include <stdexcept>
#include <string>

namespace repcoh {

// Input-side failures (exit code 2 at the CLI).
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SyntaxError : InputError {
    int line;
    SyntaxError(int line_, const std::string& what_)
        : InputError("line " + std::to_string(line_) + ": " + what_), line(line_) {}
};

struct CyclicInputError : InputError {
    using InputError::InputError;
};

struct DuplicateElementError : InputError {
    using InputError::InputError;
};

struct UnknownNameError : InputError {
    using InputError::InputError;
};

struct UnknownFamilyError : InputError {
    using InputError::InputError;
};

struct BadParamsError : InputError {
    using InputError::InputError;
};

// Resource cap on interval enumeration (exit code 3 at the CLI).
struct IntervalExplosionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Internal audit failures: these indicate bugs, not bad input.
struct IndexOutOfRangeError : std::logic_error {
    using std::logic_error::logic_error;
};

struct ConvexityViolationError : std::logic_error {
    using std::logic_error::logic_error;
};

struct DegeneracyOnSemiSimplicialError : std::logic_error {
    using std::logic_error::logic_error;
};

struct TruncationExceededError : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace repcoh
