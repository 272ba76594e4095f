#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fibhuff {

enum class ErrorCode {
  InvalidIndex,
  EmptySequence,
  NotSorted,
  NonPositiveWeight,
  TooShort,
  SizeTooSmall,
  KOutOfRange,
  SearchSpaceTooLarge,
  EmptyClass,
  TooLarge,
  ParseError,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidIndex: return "InvalidIndex";
    case ErrorCode::EmptySequence: return "EmptySequence";
    case ErrorCode::NotSorted: return "NotSorted";
    case ErrorCode::NonPositiveWeight: return "NonPositiveWeight";
    case ErrorCode::TooShort: return "TooShort";
    case ErrorCode::SizeTooSmall: return "SizeTooSmall";
    case ErrorCode::KOutOfRange: return "KOutOfRange";
    case ErrorCode::SearchSpaceTooLarge: return "SearchSpaceTooLarge";
    case ErrorCode::EmptyClass: return "EmptyClass";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

// Every precondition failure in the library is reported through this type.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace fibhuff
