#pragma once

#include <stdexcept>
#include <string>

namespace dcdecomp {

enum class ErrorCode {
  InvalidInput,
  DimensionMismatch,
  DimensionCapExceeded,
  EmptyPolyhedron,
  EmptySet,
  UnboundedWithoutWindow,
  NotUnitGenerated,
  RecompositionFailure,
  ClassVerificationFailure,
  UnsupportedTag,
  DInConvR,
};

inline const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::DimensionCapExceeded: return "DimensionCapExceeded";
    case ErrorCode::EmptyPolyhedron: return "EmptyPolyhedron";
    case ErrorCode::EmptySet: return "EmptySet";
    case ErrorCode::UnboundedWithoutWindow: return "UnboundedWithoutWindow";
    case ErrorCode::NotUnitGenerated: return "NotUnitGenerated";
    case ErrorCode::RecompositionFailure: return "RecompositionFailure";
    case ErrorCode::ClassVerificationFailure: return "ClassVerificationFailure";
    case ErrorCode::UnsupportedTag: return "UnsupportedTag";
    case ErrorCode::DInConvR: return "DInConvR";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace dcdecomp
