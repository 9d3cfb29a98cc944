#pragma once

#include <stdexcept>
#include <string>

namespace piharmonic {

// Base class for every error raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed textual input (rationals, expressions, ids).
struct ParseError : Error {
    using Error::Error;
};

// Operation outside its mathematical domain: division by zero, Gamma at a
// nonpositive argument, parameter outside a family's interval, unknown id.
struct DomainError : Error {
    using Error::Error;
};

// A Pochhammer or shifted-harmonic factor hit a zero denominator.
struct PoleError : DomainError {
    using DomainError::DomainError;
};

// A summation failed to reach its tolerance within the term budget, or the
// observed term ratios never settled under the geometric envelope.
struct ConvergenceError : Error {
    using Error::Error;
};

// A numerical consistency check failed harder than its error model allows.
struct InstabilityError : Error {
    using Error::Error;
};

}  // namespace piharmonic
