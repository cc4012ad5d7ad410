#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tecvis {

enum class ErrorCode {
  MalformedRecord,
  BadTimestamp,
  BadState,
  DuplicateId,
  IoFailure,
  MalformedLexicon,
  UnknownGroup,
  AxisMismatch,
  SameGroup,
  BadQuery,
  StoreNotLoaded,
};

constexpr std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::MalformedRecord: return "MalformedRecord";
    case ErrorCode::BadTimestamp: return "BadTimestamp";
    case ErrorCode::BadState: return "BadState";
    case ErrorCode::DuplicateId: return "DuplicateId";
    case ErrorCode::IoFailure: return "IoFailure";
    case ErrorCode::MalformedLexicon: return "MalformedLexicon";
    case ErrorCode::UnknownGroup: return "UnknownGroup";
    case ErrorCode::AxisMismatch: return "AxisMismatch";
    case ErrorCode::SameGroup: return "SameGroup";
    case ErrorCode::BadQuery: return "BadQuery";
    case ErrorCode::StoreNotLoaded: return "StoreNotLoaded";
  }
  return "Unknown";
}

// Every failure the engine reports carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace tecvis
