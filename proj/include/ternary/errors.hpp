#pragma once

#include <stdexcept>

namespace ternary {

/// Raised when an exact 64-bit result cannot be represented.
class OverflowError : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

/// Raised for arguments outside an operation's domain (zero factors, even moduli, ...).
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when a request would exceed a configured memory or work budget.
class LimitError : public std::length_error {
public:
    using std::length_error::length_error;
};

} // namespace ternary
