#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace branchworlds {

enum class ErrorCode {
  // game_core
  EmptyGame,
  ZeroTotalMeasure,
  NonpositiveFactor,
  InvalidCoefficient,
  InvalidExponent,
  // fine_graining
  ConstraintViolated,
  IndexOutOfRange,
  MaxNormUnsupported,
  SizeOverflow,
  NotMaxMode,
  SymmetricInput,
  // world_tree
  WrongUniverse,
  InvalidSequence,
  InvalidSpec,
  EnumerationTooLarge,
  NonpositiveEpsilon,
  // sequential
  ZeroTotal,
  NegativeMultiplicity,
  UniverseMismatch,
  AsymmetricInput,
  // norm_consistency
  OverlappingSupport,
  DegenerateNorm,
  UnknownNorm,
  // literal parsing
  ParseError,
};

/// Coarse classification used for process exit codes.
enum class ErrorCategory { Parse, Domain, Resource };

std::string_view error_name(ErrorCode code) noexcept;
ErrorCategory error_category(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }
  ErrorCategory category() const noexcept { return error_category(code_); }

 private:
  ErrorCode code_;
};

}  // namespace branchworlds
