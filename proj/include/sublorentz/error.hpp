#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sublorentz {

enum class ErrorKind {
  DivisionByZero,
  UnknownSymbol,
  SyntaxError,
  MissingSection,
  DuplicateMode,
  InvalidInput,
  ArityMismatch,
  SingularMatrix,
  DegenerateFrame,
  IndeterminateDomain,
  NonHorizontalBracket,
  TraceViolation,
  HTildeNonzero,
  ThetaInvalid,
  DistributionNotPreserved,
  BracketPatternViolation,
  NonConstantCoefficients,
  UnknownName,
  Indeterminate,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the engine carries one of the kinds above so that
/// callers (and the CLI exit-code mapping) can branch without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Result of a zero test that is allowed to give up.
enum class Truth { True, False, Unknown };

std::string_view to_string(Truth t);

inline Truth truth_and(Truth a, Truth b) {
  if (a == Truth::False || b == Truth::False) return Truth::False;
  if (a == Truth::Unknown || b == Truth::Unknown) return Truth::Unknown;
  return Truth::True;
}

inline Truth truth_not(Truth a) {
  if (a == Truth::True) return Truth::False;
  if (a == Truth::False) return Truth::True;
  return Truth::Unknown;
}

}  // namespace sublorentz
