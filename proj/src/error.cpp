#include "vpht/error.hpp"

namespace vpht {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::VertexCountMismatch: return "VertexCountMismatch";
    case ErrorCode::TooManyVertices: return "TooManyVertices";
    case ErrorCode::ResourceLimit: return "ResourceLimit";
    case ErrorCode::RejectUnsorted: return "RejectUnsorted";
    case ErrorCode::InvalidPartition: return "InvalidPartition";
    case ErrorCode::CycleNotInUnion: return "CycleNotInUnion";
    case ErrorCode::UnknownMetric: return "UnknownMetric";
    case ErrorCode::MetricsInconsistent: return "MetricsInconsistent";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

}  // namespace vpht
