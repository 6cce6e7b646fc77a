#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace trichrome {

/// Malformed input text. Carries the 1-based line number of the offending line.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line)
    {
    }

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// A vertex id outside [0, n).
class RangeError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// Argument outside a function's mathematical domain (e.g. tlog of a non-positive value).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A documented precondition of the callee was violated by the caller.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Brute-force oracle refused an input above its size guard.
class SizeGuardError : public std::length_error {
public:
    SizeGuardError(const std::string& oracle, std::size_t n, std::size_t limit)
        : std::length_error(oracle + ": n = " + std::to_string(n) + " exceeds guard " +
                            std::to_string(limit))
    {
    }
};

/// An internal invariant failed. Always indicates a bug in this library.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace trichrome
