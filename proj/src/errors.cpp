#include "tmfejer/errors.hpp"

namespace tmfejer {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kPoleProximity: return "PoleProximity";
    case ErrorCode::kIndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::kExtendedOffCircle: return "ExtendedOffCircle";
    case ErrorCode::kDiagonalSingularity: return "DiagonalSingularity";
    case ErrorCode::kCriticalPoint: return "CriticalPoint";
    case ErrorCode::kNearBoundary: return "NearBoundary";
    case ErrorCode::kNoConvergence: return "NoConvergence";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kValidationError: return "ValidationError";
  }
  return "Unknown";
}

}  // namespace tmfejer
