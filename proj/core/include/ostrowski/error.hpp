#pragma once

#include <stdexcept>
#include <string>

namespace ostrowski {

/// Argument lies outside the domain an operation is defined on.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Malformed argument combination (c > d, n = 0, negative weight, ...).
class ArgumentError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A construction invariant was violated (non-monotone segment, gap in the
/// partition, CDF not normalised, ...).
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An operation's stated precondition does not hold for this input.
class PreconditionError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Two routes that must agree did not. Signals a bug, never bad input.
class ConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Input file could not be parsed. `path()` is a JSON-pointer style location.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string path, const std::string& reason)
        : std::runtime_error(path + ": " + reason), path_(std::move(path)) {}

    const std::string& path() const noexcept { return path_; }

private:
    std::string path_;
};

}  // namespace ostrowski
