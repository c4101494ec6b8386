#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace jetvar {

/// Base class of every error raised by the library. Callers that only need
/// "something went wrong with the input" catch this.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// multiindex
class DecrementBelowZero : public Error { using Error::Error; };
class DimensionMismatch : public Error { using Error::Error; };

// symexpr
class SyntaxError : public Error {
 public:
  /// `position` is a 0-based character offset for expressions and a 1-based
  /// line number for problem files; `line()` tells which.
  SyntaxError(std::size_t position, const std::string& message, bool is_line = false)
      : Error((is_line ? "line " : "position ") + std::to_string(position) + ": " + message),
        position_(position),
        is_line_(is_line) {}

  std::size_t position() const { return position_; }
  bool is_line() const { return is_line_; }

 private:
  std::size_t position_;
  bool is_line_;
};
class UnknownIdentifier : public Error { using Error::Error; };
class OrderExceeded : public Error { using Error::Error; };
class MissingAssignment : public Error { using Error::Error; };
class OpaqueAtomPresent : public Error { using Error::Error; };
class DomainError : public Error { using Error::Error; };

// vforms
class ZeroContactDegree : public Error { using Error::Error; };
class OrderLowering : public Error { using Error::Error; };
class JetVariablePresent : public Error { using Error::Error; };
class BidegreeMismatch : public Error { using Error::Error; };

// jetops / varcalc
class NotLagrangian : public Error { using Error::Error; };
class IdentityCheckFailed : public Error { using Error::Error; };

// cli
class OrderMismatch : public Error { using Error::Error; };
class DuplicateName : public Error { using Error::Error; };
class UnsupportedFormat : public Error { using Error::Error; };

}  // namespace jetvar
