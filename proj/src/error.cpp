#include "sth/error.hpp"

namespace sth {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::EmptySeries: return "EmptySeries";
    case ErrorCode::TimestampsNotStrictlyIncreasing: return "TimestampsNotStrictlyIncreasing";
    case ErrorCode::EventAtOrAfterEnd: return "EventAtOrAfterEnd";
    case ErrorCode::ConsecutiveEqualStates: return "ConsecutiveEqualStates";
    case ErrorCode::UnknownStateId: return "UnknownStateId";
    case ErrorCode::FirstPointNotAtStart: return "FirstPointNotAtStart";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::UnknownTargetState: return "UnknownTargetState";
    case ErrorCode::InvalidAlphabet: return "InvalidAlphabet";
    case ErrorCode::MismatchedSpan: return "MismatchedSpan";
    case ErrorCode::MismatchedAlphabet: return "MismatchedAlphabet";
    case ErrorCode::InvalidPartition: return "InvalidPartition";
    case ErrorCode::InvalidPeriod: return "InvalidPeriod";
    case ErrorCode::UnknownMetric: return "UnknownMetric";
    case ErrorCode::MissingParams: return "MissingParams";
    case ErrorCode::DuplicateId: return "DuplicateId";
    case ErrorCode::TooFewSeries: return "TooFewSeries";
    case ErrorCode::InvalidGenSpec: return "InvalidGenSpec";
    case ErrorCode::JitterExceedsSpacing: return "JitterExceedsSpacing";
    case ErrorCode::InvalidK: return "InvalidK";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::MissingEndRow: return "MissingEndRow";
    case ErrorCode::InconsistentSpans: return "InconsistentSpans";
    case ErrorCode::ValidationError: return "ValidationError";
  }
  return "Unknown";
}

}  // namespace sth
