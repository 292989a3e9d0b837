#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sdim {

enum class ErrorCode {
  CycleDetected,
  NotBounded,
  UnknownElement,
  NotALattice,
  InvalidSpec,
  NotZeroDivisor,
  NotZeroDistributive,
  NotApplicable,
  LabelCollision,
  Disconnected,
  TooLarge,
  HypothesisUnmet,
  NotPrimePower,
  BudgetExceeded,
  UnknownSuite,
  ParseError,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::CycleDetected: return "CycleDetected";
    case ErrorCode::NotBounded: return "NotBounded";
    case ErrorCode::UnknownElement: return "UnknownElement";
    case ErrorCode::NotALattice: return "NotALattice";
    case ErrorCode::InvalidSpec: return "InvalidSpec";
    case ErrorCode::NotZeroDivisor: return "NotAZeroDivisor";
    case ErrorCode::NotZeroDistributive: return "NotZeroDistributive";
    case ErrorCode::NotApplicable: return "NotApplicable";
    case ErrorCode::LabelCollision: return "LabelCollision";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::HypothesisUnmet: return "HypothesisUnmet";
    case ErrorCode::NotPrimePower: return "NotPrimePower";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::UnknownSuite: return "UnknownSuite";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

/// Every recoverable failure in the library is reported through this type;
/// `code()` lets callers branch without parsing the message.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace sdim
