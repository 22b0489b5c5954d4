#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace specjoin {

// Category of a failed precondition or runtime check. The CLI maps
// Argument to a usage error (exit 2) and everything else to a
// domain/validation error (exit 1).
enum class ErrorKind {
  Parse,        // malformed graph6 input
  Argument,     // bad parameter to a generator or command
  Regularity,   // a regular graph was required
  Domain,       // input outside an operation's domain (isolated vertex, disconnected, ...)
  Size,         // a size guard was exceeded
  Numeric,      // an iterative method failed to converge
  Singular,     // a linear system had no usable pivot
  Switching,    // a Godsil-McKay switching condition was violated
  Consistency,  // an internal cross-check failed (implementation bug)
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string message)
      : std::runtime_error(std::move(message)), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

// Parse failures carry the byte offset of the offending character.
class ParseError : public Error {
 public:
  ParseError(std::string message, std::size_t offset)
      : Error(ErrorKind::Parse,
              message + " (byte offset " + std::to_string(offset) + ")"),
        offset_(offset) {}

  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace specjoin
