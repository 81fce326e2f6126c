#pragma once

#include <stdexcept>
#include <string>

namespace vat {

// Base class for every error thrown by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input text. Carries the 1-based line number of the offending line.
class ParseError : public Error {
public:
    ParseError(int line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

    int line() const noexcept { return line_; }

private:
    int line_;
};

// An operation was invoked outside its stated preconditions.
class PreconditionError : public Error {
public:
    using Error::Error;
};

// The requested measure has no valid attack set on this input.
class UndefinedMeasure : public Error {
public:
    using Error::Error;
};

// Unsmoothened VAT requested on a complete graph.
class CliqueInput : public UndefinedMeasure {
public:
    using UndefinedMeasure::UndefinedMeasure;
};

// An exact solver refused an instance larger than its guard and no override
// was given.
class SizeGuardError : public Error {
public:
    SizeGuardError(int size, int limit)
        : Error("instance size " + std::to_string(size) + " exceeds the exact-search guard of " +
                std::to_string(limit) + " (pass the override flag to proceed anyway)"),
          size_(size),
          limit_(limit) {}

    int size() const noexcept { return size_; }
    int limit() const noexcept { return limit_; }

private:
    int size_;
    int limit_;
};

// A plugged-in attack solver violated its contract (e.g. returned a witness
// whose removal does not separate the residual graph).
class SolverContractError : public Error {
public:
    using Error::Error;
};

}  // namespace vat
