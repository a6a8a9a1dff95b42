#pragma once

#include <stdexcept>
#include <string>

namespace floqlat {

enum class ErrorCode {
  kDim,
  kProfileLength,
  kNotUnitary,
  kDomain,
  kNotOnLine,
  kNMod4,
  kAsinDomain,
  kLengthMismatch,
  kGapless,
  kEtaRange,
  kFit,
  kNonPositive,
  kInvalidArgument,
};

const char* error_code_name(ErrorCode code);

// Every failure in the library surfaces as this exception; `code()` lets
// callers (the CLI in particular) map failures to exit statuses.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

  // Validation failures are caller mistakes; the rest are numerical.
  bool is_validation() const noexcept {
    return code_ != ErrorCode::kNotUnitary && code_ != ErrorCode::kFit &&
           code_ != ErrorCode::kGapless && code_ != ErrorCode::kDomain;
  }

 private:
  ErrorCode code_;
};

}  // namespace floqlat
