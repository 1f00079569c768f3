#pragma once

#include <stdexcept>
#include <string>

namespace cornerlab {

enum class ErrorCode {
  NonHermitianInput,
  NotPSD,
  NotState,
  SingularPoint,
  DimensionMismatch,
  InvalidConfig,
  InvalidArgument,
  NotProjection,
  EmptyInterior,
  NonOrthonormalBasis,
  RepresentationMismatch,
  UnboundedDirection,
  MissingOperand,
  TooLarge,
  InvalidOperatorSystem,
  UnknownName,
  DimOverflow,
  ParseError,
  AssertionFailed,
};

// Stable identifier used in CLI error JSON.
const char* error_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& message);

}  // namespace cornerlab
