#pragma once

#include <stdexcept>
#include <string>

namespace flatjet {

/// Bad input: dimension mismatch, malformed file, singular matrix,
/// operator not in elliptic position. The CLI maps these to exit code 2.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A derivative or operator asked for more degrees than a jet reliably holds.
class ReliabilityExhausted : public InputError {
public:
    using InputError::InputError;
};

/// A checked postcondition or certificate invariant did not hold.
/// The CLI maps these to exit code 1.
class InvariantViolation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace flatjet
