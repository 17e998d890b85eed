#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace odag {

enum class ErrorCode {
  InvalidArgument,
  CycleDetected,
  MultipleSources,
  Unreachable,
  NotAnEdge,
  NotLowering,
  NotRaising,
  NotOrdered,
  Overflow,
  Exhausted,
  Full,
  Empty,
  NonFiniteLabel,
  NotAllInfinity,
  RaiseToInfinityForbidden,
  SizeMismatch,
  Parse,
};

constexpr std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::CycleDetected: return "CycleDetected";
    case ErrorCode::MultipleSources: return "MultipleSources";
    case ErrorCode::Unreachable: return "Unreachable";
    case ErrorCode::NotAnEdge: return "NotAnEdge";
    case ErrorCode::NotLowering: return "NotLowering";
    case ErrorCode::NotRaising: return "NotRaising";
    case ErrorCode::NotOrdered: return "NotOrdered";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::Exhausted: return "Exhausted";
    case ErrorCode::Full: return "Full";
    case ErrorCode::Empty: return "Empty";
    case ErrorCode::NonFiniteLabel: return "NonFiniteLabel";
    case ErrorCode::NotAllInfinity: return "NotAllInfinity";
    case ErrorCode::RaiseToInfinityForbidden: return "RaiseToInfinityForbidden";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::Parse: return "Parse";
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

}  // namespace odag
