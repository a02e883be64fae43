#include "numrange/error.hpp"

namespace numrange {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kNonSquare: return "NonSquare";
    case ErrorCode::kNonHermitian: return "NonHermitian";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kSingular: return "Singular";
    case ErrorCode::kAlphaOutOfRange: return "AlphaOutOfRange";
    case ErrorCode::kIndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kLambdaOnBoundary: return "LambdaOnBoundary";
    case ErrorCode::kTOutOfRange: return "TOutOfRange";
    case ErrorCode::kBracketFailure: return "BracketFailure";
    case ErrorCode::kUnsupportedDegree: return "UnsupportedDegree";
    case ErrorCode::kNotRankOne: return "NotRankOne";
    case ErrorCode::kPhaseSearchFailure: return "PhaseSearchFailure";
    case ErrorCode::kSelfMapViolation: return "SelfMapViolation";
    case ErrorCode::kNotNilpotent: return "NotNilpotent";
    case ErrorCode::kConstantMap: return "ConstantMap";
    case ErrorCode::kCommonZero: return "CommonZero";
    case ErrorCode::kNotSingleZero: return "NotSingleZero";
    case ErrorCode::kDuplicateZero: return "DuplicateZero";
    case ErrorCode::kTruncationInsufficient: return "TruncationInsufficient";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code) {}

}  // namespace numrange
