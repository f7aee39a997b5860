#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace isw {

/// Base class for every error the library throws on purpose.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Bad equation text. `position` is a 0-based byte offset into the input.
class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t position)
        : Error(message + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// Truncation cap exceeded, mismatched dimensions, arity mismatch.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// Overflow to non-finite values, singular solves, amplitude blow-up.
class NumericError : public Error {
public:
    using Error::Error;
};

/// Eigensolver failed to reach the requested residual within the iteration cap.
class ConvergenceError : public Error {
public:
    using Error::Error;
};

}  // namespace isw
