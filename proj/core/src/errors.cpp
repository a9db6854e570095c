#include "cf/errors.hpp"

namespace cf {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::CompositeCharacteristic: return "CompositeCharacteristic";
    case ErrorCode::ReducibleModulus: return "ReducibleModulus";
    case ErrorCode::NonSquarefreeNumberFieldPolynomial: return "NonSquarefreeNumberFieldPolynomial";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::ZeroDivisor: return "ZeroDivisor";
    case ErrorCode::InfiniteField: return "InfiniteField";
    case ErrorCode::ZeroElement: return "ZeroElement";
    case ErrorCode::NotRepresentable: return "NotRepresentable";
    case ErrorCode::CharacteristicTwo: return "CharacteristicTwo";
    case ErrorCode::PositiveCharacteristic: return "PositiveCharacteristic";
    case ErrorCode::NoSolution: return "NoSolution";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::InvalidPermutation: return "InvalidPermutation";
    case ErrorCode::InvalidDocument: return "InvalidDocument";
    case ErrorCode::BadFieldSpec: return "BadFieldSpec";
    case ErrorCode::BadElement: return "BadElement";
    case ErrorCode::BadArgument: return "BadArgument";
    case ErrorCode::SchemaError: return "SchemaError";
    case ErrorCode::EnumerationCapExceeded: return "EnumerationCapExceeded";
    case ErrorCode::BruteForceCapExceeded: return "BruteForceCapExceeded";
    case ErrorCode::SearchBudgetExceeded: return "SearchBudgetExceeded";
    case ErrorCode::HilbertIdentityUnavailable: return "HilbertIdentityUnavailable";
  }
  return "UnknownError";
}

}  // namespace cf
