#include "hpcc/error.hpp"

namespace hpcc {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::MultipleSources: return "MultipleSources";
    case ErrorCode::MultipleSinks: return "MultipleSinks";
    case ErrorCode::CycleDetected: return "CycleDetected";
    case ErrorCode::SideNotAPath: return "SideNotAPath";
    case ErrorCode::EmbeddingNotPlane: return "EmbeddingNotPlane";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::DuplicateVertex: return "DuplicateVertex";
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::EdgeNotInGraph: return "EdgeNotInGraph";
    case ErrorCode::SameSideCompletionEdge: return "SameSideCompletionEdge";
    case ErrorCode::NotAPermutation: return "NotAPermutation";
    case ErrorCode::NotLinearExtension: return "NotLinearExtension";
    case ErrorCode::NotAnStPolygon: return "NotAnStPolygon";
    case ErrorCode::InvalidSolution: return "InvalidSolution";
    case ErrorCode::SpineNotLinearExtension: return "SpineNotLinearExtension";
    case ErrorCode::InstanceTooLarge: return "InstanceTooLarge";
    case ErrorCode::InfeasibleParams: return "InfeasibleParams";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

}  // namespace hpcc
