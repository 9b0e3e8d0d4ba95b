#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sth {

enum class ErrorCode {
  EmptySeries,
  TimestampsNotStrictlyIncreasing,
  EventAtOrAfterEnd,
  ConsecutiveEqualStates,
  UnknownStateId,
  FirstPointNotAtStart,
  OutOfRange,
  UnknownTargetState,
  InvalidAlphabet,
  MismatchedSpan,
  MismatchedAlphabet,
  InvalidPartition,
  InvalidPeriod,
  UnknownMetric,
  MissingParams,
  DuplicateId,
  TooFewSeries,
  InvalidGenSpec,
  JitterExceedsSpacing,
  InvalidK,
  ParseError,
  MissingEndRow,
  InconsistentSpans,
  ValidationError,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Exception type used throughout the library. The code identifies the
/// failure class; what() carries a human-readable message that names the
/// offending series, line or state where one exists.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : Error(code, message, code) {}

  /// Wraps a lower-level failure; `cause` keeps its code.
  Error(ErrorCode code, const std::string& message, ErrorCode cause)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code),
        cause_(cause) {}

  ErrorCode code() const noexcept { return code_; }
  ErrorCode cause() const noexcept { return cause_; }

 private:
  ErrorCode code_;
  ErrorCode cause_;
};

}  // namespace sth
