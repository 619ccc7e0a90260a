#include "core/error.hpp"

namespace oblique {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::DegenerateBasis:     return "DegenerateBasis";
    case ErrorCode::SingularGram:        return "SingularGram";
    case ErrorCode::NotUnitBasis:        return "NotUnitBasis";
    case ErrorCode::DimensionMismatch:   return "DimensionMismatch";
    case ErrorCode::NotPositiveDefinite: return "NotPositiveDefinite";
    case ErrorCode::FingerprintMismatch: return "FingerprintMismatch";
    case ErrorCode::SingularJacobian:    return "SingularJacobian";
    case ErrorCode::OutOfDomain:         return "OutOfDomain";
    case ErrorCode::NonFinite:           return "NonFinite";
    case ErrorCode::RankDeficient:       return "RankDeficient";
    case ErrorCode::ZeroTangent:         return "ZeroTangent";
    case ErrorCode::InvalidArgument:     return "InvalidArgument";
  }
  return "UnknownError";
}

}  // namespace oblique
