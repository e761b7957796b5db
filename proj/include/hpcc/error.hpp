#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hpcc {

enum class ErrorCode {
  MultipleSources,
  MultipleSinks,
  CycleDetected,
  SideNotAPath,
  EmbeddingNotPlane,
  DuplicateEdge,
  DuplicateVertex,
  UnknownVertex,
  EdgeNotInGraph,
  SameSideCompletionEdge,
  NotAPermutation,
  NotLinearExtension,
  NotAnStPolygon,
  InvalidSolution,
  SpineNotLinearExtension,
  InstanceTooLarge,
  InfeasibleParams,
  ParseError,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace hpcc
