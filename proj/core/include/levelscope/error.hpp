#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace levelscope {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed polynomial text; carries the byte offset of the offending token.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, std::size_t position)
        : Error(msg + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// A configured budget (term count, exponent range, degree bound) was exceeded.
class ResourceError : public Error {
public:
    using Error::Error;
};

/// Precondition violation on an argument (wrong degree, mismatched modulus, ...).
class ArgumentError : public Error {
public:
    using Error::Error;
};

/// The given data does not define a valid hyperelliptic curve model.
class CurveError : public Error {
public:
    using Error::Error;
};

/// A state the underlying theorems rule out; indicates a bug, not bad input.
class InternalError : public Error {
public:
    using Error::Error;
};

}  // namespace levelscope
