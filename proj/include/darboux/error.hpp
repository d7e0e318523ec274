#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace darboux {

// Base of every error raised by the library. The C API maps the concrete
// subclasses onto its status codes.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Malformed textual or JSON input. position is a byte offset into the text
// being parsed, or npos when not applicable.
class ParseError : public Error {
  public:
    ParseError(const std::string& what, std::size_t position = npos)
        : Error(position == npos ? what : what + " at position " + std::to_string(position)),
          position_(position) {}

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
    std::size_t position() const noexcept { return position_; }

  private:
    std::size_t position_;
};

// Operands built over different variable contexts, or unknown variables.
class ContextError : public Error {
  public:
    using Error::Error;
};

// Division by zero, exponent overflow and similar arithmetic domain faults.
class ArithmeticError : public Error {
  public:
    using Error::Error;
};

// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
  public:
    using Error::Error;
};

// An internal cross-check failed (post-hoc verification, oracle mismatch).
class InvariantViolation : public Error {
  public:
    using Error::Error;
};

}  // namespace darboux
