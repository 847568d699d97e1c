#include "sublorentz/error.hpp"

namespace sublorentz {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::UnknownSymbol: return "UnknownSymbol";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::MissingSection: return "MissingSection";
    case ErrorKind::DuplicateMode: return "DuplicateMode";
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::ArityMismatch: return "ArityMismatch";
    case ErrorKind::SingularMatrix: return "SingularMatrix";
    case ErrorKind::DegenerateFrame: return "DegenerateFrame";
    case ErrorKind::IndeterminateDomain: return "IndeterminateDomain";
    case ErrorKind::NonHorizontalBracket: return "NonHorizontalBracket";
    case ErrorKind::TraceViolation: return "TraceViolation";
    case ErrorKind::HTildeNonzero: return "HTildeNonzero";
    case ErrorKind::ThetaInvalid: return "ThetaInvalid";
    case ErrorKind::DistributionNotPreserved: return "DistributionNotPreserved";
    case ErrorKind::BracketPatternViolation: return "BracketPatternViolation";
    case ErrorKind::NonConstantCoefficients: return "NonConstantCoefficients";
    case ErrorKind::UnknownName: return "UnknownName";
    case ErrorKind::Indeterminate: return "Indeterminate";
  }
  return "Error";
}

std::string_view to_string(Truth t) {
  switch (t) {
    case Truth::True: return "true";
    case Truth::False: return "false";
    case Truth::Unknown: return "unknown";
  }
  return "unknown";
}

}  // namespace sublorentz
