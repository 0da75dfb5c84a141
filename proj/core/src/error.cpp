#include "branchworlds/error.hpp"

namespace branchworlds {

std::string_view error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::EmptyGame: return "EmptyGame";
    case ErrorCode::ZeroTotalMeasure: return "ZeroTotalMeasure";
    case ErrorCode::NonpositiveFactor: return "NonpositiveFactor";
    case ErrorCode::InvalidCoefficient: return "InvalidCoefficient";
    case ErrorCode::InvalidExponent: return "InvalidExponent";
    case ErrorCode::ConstraintViolated: return "ConstraintViolated";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::MaxNormUnsupported: return "MaxNormUnsupported";
    case ErrorCode::SizeOverflow: return "SizeOverflow";
    case ErrorCode::NotMaxMode: return "NotMaxMode";
    case ErrorCode::SymmetricInput: return "SymmetricInput";
    case ErrorCode::WrongUniverse: return "WrongUniverse";
    case ErrorCode::InvalidSequence: return "InvalidSequence";
    case ErrorCode::InvalidSpec: return "InvalidSpec";
    case ErrorCode::EnumerationTooLarge: return "EnumerationTooLarge";
    case ErrorCode::NonpositiveEpsilon: return "NonpositiveEpsilon";
    case ErrorCode::ZeroTotal: return "ZeroTotal";
    case ErrorCode::NegativeMultiplicity: return "NegativeMultiplicity";
    case ErrorCode::UniverseMismatch: return "UniverseMismatch";
    case ErrorCode::AsymmetricInput: return "AsymmetricInput";
    case ErrorCode::OverlappingSupport: return "OverlappingSupport";
    case ErrorCode::DegenerateNorm: return "DegenerateNorm";
    case ErrorCode::UnknownNorm: return "UnknownNorm";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

ErrorCategory error_category(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::ParseError:
      return ErrorCategory::Parse;
    case ErrorCode::SizeOverflow:
    case ErrorCode::EnumerationTooLarge:
      return ErrorCategory::Resource;
    default:
      return ErrorCategory::Domain;
  }
}

}  // namespace branchworlds
