#include "dyadkde/error.hpp"

namespace dyadkde {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::MissingDyad: return "MissingDyad";
    case ErrorCode::ConflictingDuplicate: return "ConflictingDuplicate";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::NonFiniteWeight: return "NonFiniteWeight";
    case ErrorCode::InvalidNodeId: return "InvalidNodeId";
    case ErrorCode::MalformedRow: return "MalformedRow";
    case ErrorCode::NonPositiveBandwidth: return "NonPositiveBandwidth";
    case ErrorCode::EmptyGrid: return "EmptyGrid";
    case ErrorCode::UnsortedGrid: return "UnsortedGrid";
    case ErrorCode::NodeOutOfRange: return "NodeOutOfRange";
    case ErrorCode::TooFewNodes: return "TooFewNodes";
    case ErrorCode::InvalidAlpha: return "InvalidAlpha";
    case ErrorCode::InvalidAttribute: return "InvalidAttribute";
    case ErrorCode::InvalidProbability: return "InvalidProbability";
    case ErrorCode::ZeroBiasCoefficient: return "ZeroBiasCoefficient";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::UnknownKernel: return "UnknownKernel";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

}  // namespace dyadkde
