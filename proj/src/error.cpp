#include "opsem/error.hpp"

namespace opsem {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::CapacityMismatch: return "CapacityMismatch";
    case ErrorCode::UnknownSignal: return "UnknownSignal";
    case ErrorCode::UnknownState: return "UnknownState";
    case ErrorCode::InvalidOperator: return "InvalidOperator";
    case ErrorCode::EmptyLanguage: return "EmptyLanguage";
    case ErrorCode::InvalidFamily: return "InvalidFamily";
    case ErrorCode::SpaceTooLarge: return "SpaceTooLarge";
    case ErrorCode::InvalidMetaState: return "InvalidMetaState";
    case ErrorCode::ContradictoryEvidence: return "ContradictoryEvidence";
    case ErrorCode::NoInformativeQuery: return "NoInformativeQuery";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ValidationError: return "ValidationError";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace opsem
