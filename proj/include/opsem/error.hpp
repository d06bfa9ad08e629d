#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace opsem {

enum class ErrorCode {
  CapacityMismatch,
  UnknownSignal,
  UnknownState,
  InvalidOperator,
  EmptyLanguage,
  InvalidFamily,
  SpaceTooLarge,
  InvalidMetaState,
  ContradictoryEvidence,
  NoInformativeQuery,
  InvalidArgument,
  ParseError,
  ValidationError,
  IoError,
};

std::string_view to_string(ErrorCode code);

/// Every failure in the library is reported through this one exception type;
/// callers dispatch on code().
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace opsem
