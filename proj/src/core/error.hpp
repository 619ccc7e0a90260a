#pragma once

#include <stdexcept>
#include <string>

namespace oblique {

enum class ErrorCode {
  DegenerateBasis,
  SingularGram,
  NotUnitBasis,
  DimensionMismatch,
  NotPositiveDefinite,
  FingerprintMismatch,
  SingularJacobian,
  OutOfDomain,
  NonFinite,
  RankDeficient,
  ZeroTangent,
  InvalidArgument,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace oblique
