#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mckay {

enum class ErrorCode {
  ParseError,
  OrderCapExceeded,
  InvalidAction,
  ClosureDiverged,
  NotNormal,
  NoSuitablePrime,
  SplitIncomplete,
  LiftOutOfRange,
  NoSuchIrrep,
  SelectorEmpty,
  InternalNonInteger,
  OrbitMismatch,
  PreconditionViolated,
  ClassificationViolated,
  SubgroupNotFound,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::OrderCapExceeded: return "OrderCapExceeded";
    case ErrorCode::InvalidAction: return "InvalidAction";
    case ErrorCode::ClosureDiverged: return "ClosureDiverged";
    case ErrorCode::NotNormal: return "NotNormal";
    case ErrorCode::NoSuitablePrime: return "NoSuitablePrime";
    case ErrorCode::SplitIncomplete: return "SplitIncomplete";
    case ErrorCode::LiftOutOfRange: return "LiftOutOfRange";
    case ErrorCode::NoSuchIrrep: return "NoSuchIrrep";
    case ErrorCode::SelectorEmpty: return "SelectorEmpty";
    case ErrorCode::InternalNonInteger: return "InternalNonInteger";
    case ErrorCode::OrbitMismatch: return "OrbitMismatch";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::ClassificationViolated: return "ClassificationViolated";
    case ErrorCode::SubgroupNotFound: return "SubgroupNotFound";
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

}  // namespace mckay
