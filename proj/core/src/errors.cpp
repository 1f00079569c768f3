#include "cornerlab/errors.hpp"

namespace cornerlab {

const char* error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NonHermitianInput: return "NonHermitianInput";
    case ErrorCode::NotPSD: return "NotPSD";
    case ErrorCode::NotState: return "NotState";
    case ErrorCode::SingularPoint: return "SingularPoint";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::InvalidConfig: return "InvalidConfig";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NotProjection: return "NotProjection";
    case ErrorCode::EmptyInterior: return "EmptyInterior";
    case ErrorCode::NonOrthonormalBasis: return "NonOrthonormalBasis";
    case ErrorCode::RepresentationMismatch: return "RepresentationMismatch";
    case ErrorCode::UnboundedDirection: return "UnboundedDirection";
    case ErrorCode::MissingOperand: return "MissingOperand";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::InvalidOperatorSystem: return "InvalidOperatorSystem";
    case ErrorCode::UnknownName: return "UnknownName";
    case ErrorCode::DimOverflow: return "DimOverflow";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::AssertionFailed: return "AssertionFailed";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(message), code_(code) {}

void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace cornerlab
