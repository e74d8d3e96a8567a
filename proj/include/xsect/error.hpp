#ifndef XSECT_ERROR_HPP
#define XSECT_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace xsect {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed text input. `position` is a 0-based character offset within the
/// parsed fragment; `line` is 1-based and 0 when unknown.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position, std::size_t line = 0)
        : Error(what), position_(position), line_(line) {}

    std::size_t position() const noexcept { return position_; }
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t position_;
    std::size_t line_;
};

/// Incompatible matrix or subspace shapes.
class ShapeError : public Error {
public:
    using Error::Error;
};

/// An argument violates a mathematical precondition (zero divisor, zero
/// parameter, index out of range, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

} // namespace xsect

#endif // XSECT_ERROR_HPP
