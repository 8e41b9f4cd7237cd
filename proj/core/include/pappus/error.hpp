#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pappus {

enum class ErrorCode {
  DivisionByZero,
  FieldMismatch,
  DegreeOverflow,
  PoleAtPoint,
  CoincidentInputs,
  NotCollinear,
  BadAuxiliaryPoint,
  DegenerateRatio,
  DegenerateParameters,
  NonCollinearCPoints,
  InvalidInitialData,
  IncompatibleLabeling,
  TripleNotCollinear,
  LandingFailure,
  DuplicateLines,
  SNotOnLine,
  ParseError,
  AllPointsAtInfinity,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the engine. `code()` identifies the condition,
/// `what()` carries the detail (e.g. the violated degeneracy condition).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

inline std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::DegreeOverflow: return "DegreeOverflow";
    case ErrorCode::PoleAtPoint: return "PoleAtPoint";
    case ErrorCode::CoincidentInputs: return "CoincidentInputs";
    case ErrorCode::NotCollinear: return "NotCollinear";
    case ErrorCode::BadAuxiliaryPoint: return "BadAuxiliaryPoint";
    case ErrorCode::DegenerateRatio: return "DegenerateRatio";
    case ErrorCode::DegenerateParameters: return "DegenerateParameters";
    case ErrorCode::NonCollinearCPoints: return "NonCollinearCPoints";
    case ErrorCode::InvalidInitialData: return "InvalidInitialData";
    case ErrorCode::IncompatibleLabeling: return "IncompatibleLabeling";
    case ErrorCode::TripleNotCollinear: return "TripleNotCollinear";
    case ErrorCode::LandingFailure: return "LandingFailure";
    case ErrorCode::DuplicateLines: return "DuplicateLines";
    case ErrorCode::SNotOnLine: return "SNotOnLine";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::AllPointsAtInfinity: return "AllPointsAtInfinity";
  }
  return "Unknown";
}

}  // namespace pappus
