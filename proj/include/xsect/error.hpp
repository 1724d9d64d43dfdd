#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace xsect {

/// Every failure raised by the library carries one of these kinds. The CLI
/// maps them onto its JSON error object.
enum class ErrorKind {
  InvalidArgument,
  FieldMismatch,
  NotPrime,
  DivisionByZero,
  NoRootExists,
  SyntaxError,
  UnknownVariable,
  FieldLiteralError,
  ZeroPolynomial,
  SingularMatrix,
  NotEnoughSamples,
  DuplicateSamples,
  DuplicatePoints,
  NotPrincipal,
  FeasibilityCapExceeded,
  CapExceeded,
  DegenerateDataset,
  InconsistentWithHypothesis,
  TooManyDropPoints,
  NoInterpolant,
  VerificationFailed,
  Internal,
};

inline std::string_view to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::NoRootExists: return "NoRootExists";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::UnknownVariable: return "UnknownVariable";
    case ErrorKind::FieldLiteralError: return "FieldLiteralError";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::SingularMatrix: return "SingularMatrix";
    case ErrorKind::NotEnoughSamples: return "NotEnoughSamples";
    case ErrorKind::DuplicateSamples: return "DuplicateSamples";
    case ErrorKind::DuplicatePoints: return "DuplicatePoints";
    case ErrorKind::NotPrincipal: return "NotPrincipal";
    case ErrorKind::FeasibilityCapExceeded: return "FeasibilityCapExceeded";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::DegenerateDataset: return "DegenerateDataset";
    case ErrorKind::InconsistentWithHypothesis: return "InconsistentWithHypothesis";
    case ErrorKind::TooManyDropPoints: return "TooManyDropPoints";
    case ErrorKind::NoInterpolant: return "NoInterpolant";
    case ErrorKind::VerificationFailed: return "VerificationFailed";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Syntax errors remember the byte offset in the input.
class ParseError : public Error {
 public:
  ParseError(ErrorKind kind, std::size_t position, const std::string& what)
      : Error(kind, what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Raised when a bound would be instantiated as a matrix or sample set larger
/// than the configured cap. `bound` is the decimal value that triggered it.
class FeasibilityError : public Error {
 public:
  FeasibilityError(std::string bound, const std::string& what)
      : Error(ErrorKind::FeasibilityCapExceeded, what), bound_(std::move(bound)) {}

  const std::string& bound() const noexcept { return bound_; }

 private:
  std::string bound_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace xsect
