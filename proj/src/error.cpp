#include "floqlat/error.hpp"

namespace floqlat {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDim: return "ERR_DIM";
    case ErrorCode::kProfileLength: return "ERR_PROFILE_LEN";
    case ErrorCode::kNotUnitary: return "ERR_NOT_UNITARY";
    case ErrorCode::kDomain: return "ERR_DOMAIN";
    case ErrorCode::kNotOnLine: return "ERR_NOT_ON_LINE";
    case ErrorCode::kNMod4: return "ERR_N_MOD4";
    case ErrorCode::kAsinDomain: return "ERR_ASIN_DOMAIN";
    case ErrorCode::kLengthMismatch: return "ERR_LEN_MISMATCH";
    case ErrorCode::kGapless: return "ERR_GAPLESS";
    case ErrorCode::kEtaRange: return "ERR_ETA_RANGE";
    case ErrorCode::kFit: return "ERR_FIT";
    case ErrorCode::kNonPositive: return "ERR_NONPOSITIVE";
    case ErrorCode::kInvalidArgument: return "ERR_INVALID_ARGUMENT";
  }
  return "ERR_UNKNOWN";
}

}  // namespace floqlat
