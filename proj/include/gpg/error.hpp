#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gpg {

enum class ErrorCode {
  BudgetExceeded,
  CompositeP,
  NotASubfield,
  ZeroElement,
  DirectedUnsupported,
  NotInFamily,
  MixedBase,
  NotDivisible,
  ZeroScale,
  OutOfTheory,
  UnbalancedCounts,
  DegenerateGraph,
  Disconnected,
  NotApplicable,
  NotStronglyRegular,
  DisconnectedComponentsFound,
  InvalidArgument,
  InternalError,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::CompositeP: return "CompositeP";
    case ErrorCode::NotASubfield: return "NotASubfield";
    case ErrorCode::ZeroElement: return "ZeroElement";
    case ErrorCode::DirectedUnsupported: return "DirectedUnsupported";
    case ErrorCode::NotInFamily: return "NotInFamily";
    case ErrorCode::MixedBase: return "MixedBase";
    case ErrorCode::NotDivisible: return "NotDivisible";
    case ErrorCode::ZeroScale: return "ZeroScale";
    case ErrorCode::OutOfTheory: return "OutOfTheory";
    case ErrorCode::UnbalancedCounts: return "UnbalancedCounts";
    case ErrorCode::DegenerateGraph: return "DegenerateGraph";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::NotApplicable: return "NotApplicable";
    case ErrorCode::NotStronglyRegular: return "NotStronglyRegular";
    case ErrorCode::DisconnectedComponentsFound: return "DisconnectedComponentsFound";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::InternalError: return "InternalError";
  }
  return "Unknown";
}

/// All library failures are reported through this exception. The code is
/// stable and machine-checkable; the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

/// Internal consistency check. A failure here means a proven identity did not
/// hold, which is a bug rather than bad input.
inline void ensure(bool condition, const std::string& what) {
  if (!condition) fail(ErrorCode::InternalError, what);
}

}  // namespace gpg
