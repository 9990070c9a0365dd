#include "quadsq/errors.hpp"

namespace quadsq {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NoUniqueFixedPoint: return "NoUniqueFixedPoint";
    case ErrorKind::DegenerateQuadrilateral: return "DegenerateQuadrilateral";
    case ErrorKind::DegenerateTriangle: return "DegenerateTriangle";
    case ErrorKind::DegenerateHexagon: return "DegenerateHexagon";
    case ErrorKind::InvalidOffsets: return "InvalidOffsets";
    case ErrorKind::InvalidPermutation: return "InvalidPermutation";
    case ErrorKind::PivotUndefined: return "PivotUndefined";
    case ErrorKind::NotAParallelogram: return "NotAParallelogram";
    case ErrorKind::NotAdmissibleTuple: return "NotAdmissibleTuple";
    case ErrorKind::InsufficientPoints: return "InsufficientPoints";
    case ErrorKind::DegenerateIntermediate: return "DegenerateIntermediate";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ValidationError: return "ValidationError";
    case ErrorKind::IoError: return "IoError";
    case ErrorKind::SamplingExhausted: return "SamplingExhausted";
  }
  return "Unknown";
}

}  // namespace quadsq
