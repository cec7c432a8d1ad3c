#pragma once

#include <stdexcept>
#include <string>

namespace thinloop {

enum class ErrorCode {
  NonPrimeCharacteristic,
  ReducibleModulus,
  InvalidArgument,
  FieldMismatch,
  FieldTooLarge,
  TableMismatch,
  NotASubalgebra,
  NotAnIdeal,
  FieldSizeMismatch,
  NotAdditivelyClosed,
  ThetaNotAdditive,
  NoRootInField,
  InvalidToralParams,
  Mu3InPrimeField,
  DenominatorZero,
  NoAnnihilator,
  MalformedDiamond,
  ConsecutiveDiamonds,
  NotStabilized,
  InvalidGrading,
};

inline const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonPrimeCharacteristic: return "NonPrimeCharacteristic";
    case ErrorCode::ReducibleModulus: return "ReducibleModulus";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::FieldTooLarge: return "FieldTooLarge";
    case ErrorCode::TableMismatch: return "TableMismatch";
    case ErrorCode::NotASubalgebra: return "NotASubalgebra";
    case ErrorCode::NotAnIdeal: return "NotAnIdeal";
    case ErrorCode::FieldSizeMismatch: return "FieldSizeMismatch";
    case ErrorCode::NotAdditivelyClosed: return "NotAdditivelyClosed";
    case ErrorCode::ThetaNotAdditive: return "ThetaNotAdditive";
    case ErrorCode::NoRootInField: return "NoRootInField";
    case ErrorCode::InvalidToralParams: return "InvalidToralParams";
    case ErrorCode::Mu3InPrimeField: return "Mu3InPrimeField";
    case ErrorCode::DenominatorZero: return "DenominatorZero";
    case ErrorCode::NoAnnihilator: return "NoAnnihilator";
    case ErrorCode::MalformedDiamond: return "MalformedDiamond";
    case ErrorCode::ConsecutiveDiamonds: return "ConsecutiveDiamonds";
    case ErrorCode::NotStabilized: return "NotStabilized";
    case ErrorCode::InvalidGrading: return "InvalidGrading";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace thinloop
