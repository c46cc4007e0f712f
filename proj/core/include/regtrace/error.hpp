#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace regtrace {

enum class ErrorKind {
  ParseError,
  NotRegular,
  NotSimple,
  NotConnected,
  DegreeTooSmall,
  InfeasibleParameters,
  GenerationFailed,
  BudgetExceeded,
  InvalidLength,
  ConvergenceFailure,
  QuadratureFailure,
  NotNearInteger,
  SupportExceedsTruncation,
};

std::string_view to_string(ErrorKind kind);

// All library failures surface as this exception; `kind()` lets callers
// branch without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace regtrace
