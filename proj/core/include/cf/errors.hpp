#pragma once

#include <stdexcept>
#include <string>

namespace cf {

enum class ErrorCode {
  // domain errors: the request is well formed but has no answer
  CompositeCharacteristic,
  ReducibleModulus,
  NonSquarefreeNumberFieldPolynomial,
  DivisionByZero,
  ZeroDivisor,
  InfiniteField,
  ZeroElement,
  NotRepresentable,
  CharacteristicTwo,
  PositiveCharacteristic,
  NoSolution,
  LengthMismatch,
  InvalidPermutation,
  InvalidDocument,

  // usage errors: malformed input
  BadFieldSpec,
  BadElement,
  BadArgument,
  SchemaError,

  // resource errors: a configured cap was hit
  EnumerationCapExceeded,
  BruteForceCapExceeded,
  SearchBudgetExceeded,
  HilbertIdentityUnavailable,
};

enum class ErrorCategory { Domain, Usage, Resource };

constexpr ErrorCategory category_of(ErrorCode code) {
  switch (code) {
    case ErrorCode::BadFieldSpec:
    case ErrorCode::BadElement:
    case ErrorCode::BadArgument:
    case ErrorCode::SchemaError:
      return ErrorCategory::Usage;
    case ErrorCode::EnumerationCapExceeded:
    case ErrorCode::BruteForceCapExceeded:
    case ErrorCode::SearchBudgetExceeded:
    case ErrorCode::HilbertIdentityUnavailable:
      return ErrorCategory::Resource;
    default:
      return ErrorCategory::Domain;
  }
}

// Exit status used by the CLI for each category. 0 is success.
constexpr int exit_status(ErrorCategory cat) {
  switch (cat) {
    case ErrorCategory::Domain: return 1;
    case ErrorCategory::Usage: return 2;
    case ErrorCategory::Resource: return 3;
  }
  return 2;
}

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }
  ErrorCategory category() const { return category_of(code_); }

 private:
  ErrorCode code_;
};

}  // namespace cf
