#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace numrange {

enum class ErrorCode {
  kNonSquare,
  kNonHermitian,
  kDimensionMismatch,
  kSingular,
  kAlphaOutOfRange,
  kIndexOutOfRange,
  kInvalidArgument,
  kLambdaOnBoundary,
  kTOutOfRange,
  kBracketFailure,
  kUnsupportedDegree,
  kNotRankOne,
  kPhaseSearchFailure,
  kSelfMapViolation,
  kNotNilpotent,
  kConstantMap,
  kCommonZero,
  kNotSingleZero,
  kDuplicateZero,
  kTruncationInsufficient,
};

std::string_view to_string(ErrorCode code) noexcept;

// Every library failure is reported through this type; code() identifies the
// failure class, what() carries the context.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace numrange
