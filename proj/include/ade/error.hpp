#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ade {

enum class ErrorCode {
  OutOfRange,
  BasisMismatch,
  UnrelatedModels,
  EnumerationBoundExceeded,
  NotARoot,
  OrbitCapExceeded,
  ParityViolation,
  UnsupportedRegime,
  RepresentationMismatch,
  NonzeroBoundaryDegree,
  MissingMarking,
  NonReducedCover,
  InconsistentDegrees,
  MissingCollision,
  InvalidDatum,
  InvalidRing,
  DecompositionFailed,
  Schema,
  Parse,
  Io,
};

std::string_view error_code_name(ErrorCode code);

/// Raised for any violated precondition of a domain operation.
class DomainError : public std::runtime_error {
 public:
  DomainError(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  [[nodiscard]] ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace ade
