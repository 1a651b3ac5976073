#pragma once

#include <stdexcept>
#include <string>

namespace vpht {

enum class ErrorCode {
  InvalidInput,
  OutOfRange,
  SelfLoop,
  DuplicateEdge,
  VertexCountMismatch,
  TooManyVertices,
  ResourceLimit,
  RejectUnsorted,
  InvalidPartition,
  CycleNotInUnion,
  UnknownMetric,
  MetricsInconsistent,
};

const char* to_string(ErrorCode code);

// Every recoverable failure in the engine is reported through this type.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);

  ErrorCode code() const noexcept { return code_; }

  // True for the failures the command line maps to the resource-limit exit.
  bool is_resource_limit() const noexcept {
    return code_ == ErrorCode::TooManyVertices || code_ == ErrorCode::ResourceLimit;
  }

 private:
  ErrorCode code_;
};

}  // namespace vpht
