#pragma once

#include <stdexcept>
#include <string>

namespace esbss {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed edge-list input. `line()` is 1-based; 0 when no line applies.
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}

    [[nodiscard]] std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// An argument is outside the documented domain (bad ids, bad sizes).
class RangeError : public Error {
public:
    using Error::Error;
};

/// The input graph does not satisfy an operation's structural precondition.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// Augmentation ran out of candidate arcs while biconnectivity still fails.
class AugmentationStuck : public Error {
public:
    using Error::Error;
};

/// An internal postcondition failed; indicates a bug rather than bad input.
class InvariantError : public Error {
public:
    using Error::Error;
};

}  // namespace esbss
