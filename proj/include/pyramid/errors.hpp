#ifndef PYRAMID_ERRORS_HPP
#define PYRAMID_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pyramid
{

/// Base of every error raised by the library.
class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error
{
public:
    DivisionByZero() : Error("division by zero") {}
};

/// Malformed textual input. `position` is a 0-based byte offset into the input.
class ParseError : public Error
{
public:
    ParseError(const std::string &what, std::size_t position)
        : Error(what + " at position " + std::to_string(position)), m_position(position)
    {
    }
    std::size_t position() const noexcept
    {
        return m_position;
    }

private:
    std::size_t m_position;
};

/// An argument violates the documented precondition of an operation.
class PreconditionError : public Error
{
public:
    using Error::Error;
};

/// Internal consistency check failed (a mathematical invariant did not hold).
class InternalError : public Error
{
public:
    using Error::Error;
};

} // namespace pyramid

#endif
