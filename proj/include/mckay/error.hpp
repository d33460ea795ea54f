#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mckay {

enum class ErrorCode {
  kInvalidDescriptor,
  kNonIntegralMultiplicity,
  kUnsupportedSeries,
  kNonIntegralCoefficient,
  kAlreadyFramed,
  kAlreadyTripled,
  kUnexpectedLoop,
  kEmptyCorner,
  kVertexNotInCorner,
  kDegreeCapExceeded,
  kBoundNotFound,
  kEndpointMismatch,
  kShapeMismatch,
  kUnsupportedTheta,
  kDimensionTooLarge,
  kBadPrime,
  kNotSemistable,
  kNotStable,
  kNotStableForSource,
  kRepresentativeDependence,
  kTruncationNotReached,
  kNoTermination,
  kNotEquivariant,
  kMomentMapNonzero,
  kNotAQuotient,
  kUnsupportedCorner,
  kRelationViolation,
  kParse,
  kUsage,
};

std::string_view error_code_name(ErrorCode code);

/// Single exception type carried through the library; the code drives CLI exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace mckay
