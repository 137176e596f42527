#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace shiftlab {

/// Which precondition a failed operation violated.
enum class ErrorKind {
  SizeMismatch,
  TruncationOverflow,
  Support,          ///< input lives in the wrong block (H² vs H²₋)
  Margin,           ///< Blaschke zero too close to the circle
  NotUnimodular,
  FloorViolation,   ///< modulus sample below modulus_floor
  ExtremePoint,
  Coprimality,
  NotInModelSpace,
  NotInner,
  Degenerate,
  NotUnitary,
  NotInvariant,
  AmbientMismatch,
};

std::string_view to_string(ErrorKind kind);

/// Mathematical precondition failure. The CLI maps these to exit code 3.
class DomainError : public std::runtime_error {
 public:
  DomainError(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Malformed input file or JSON. The CLI maps these to exit code 2.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace shiftlab
