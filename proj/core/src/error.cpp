#include "regtrace/error.hpp"
#include "regtrace/regtrace.hpp"

namespace regtrace {

const char* version() { return REGTRACE_VERSION; }

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::NotRegular: return "NotRegular";
    case ErrorKind::NotSimple: return "NotSimple";
    case ErrorKind::NotConnected: return "NotConnected";
    case ErrorKind::DegreeTooSmall: return "DegreeTooSmall";
    case ErrorKind::InfeasibleParameters: return "InfeasibleParameters";
    case ErrorKind::GenerationFailed: return "GenerationFailed";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::InvalidLength: return "InvalidLength";
    case ErrorKind::ConvergenceFailure: return "ConvergenceFailure";
    case ErrorKind::QuadratureFailure: return "QuadratureFailure";
    case ErrorKind::NotNearInteger: return "NotNearInteger";
    case ErrorKind::SupportExceedsTruncation: return "SupportExceedsTruncation";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

}  // namespace regtrace
