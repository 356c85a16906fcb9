#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace alia {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A mathematical precondition does not hold (division by zero, mixed fields,
/// an input algebra that is not left-Alia, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Shapes or dimensions of the operands do not fit together.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// Two independent computations of the same quantity disagreed. Always a bug.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

/// A structurally well-formed input document with missing or mistyped fields.
class FormatError : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input. `position` is a 0-based character offset.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace alia
