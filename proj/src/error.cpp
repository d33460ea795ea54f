#include "mckay/error.hpp"

namespace mckay {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidDescriptor: return "InvalidDescriptor";
    case ErrorCode::kNonIntegralMultiplicity: return "NonIntegralMultiplicity";
    case ErrorCode::kUnsupportedSeries: return "UnsupportedSeries";
    case ErrorCode::kNonIntegralCoefficient: return "NonIntegralCoefficient";
    case ErrorCode::kAlreadyFramed: return "AlreadyFramed";
    case ErrorCode::kAlreadyTripled: return "AlreadyTripled";
    case ErrorCode::kUnexpectedLoop: return "UnexpectedLoop";
    case ErrorCode::kEmptyCorner: return "EmptyI";
    case ErrorCode::kVertexNotInCorner: return "VertexNotInCorner";
    case ErrorCode::kDegreeCapExceeded: return "DegreeCapExceeded";
    case ErrorCode::kBoundNotFound: return "BoundNotFound";
    case ErrorCode::kEndpointMismatch: return "EndpointMismatch";
    case ErrorCode::kShapeMismatch: return "ShapeMismatch";
    case ErrorCode::kUnsupportedTheta: return "UnsupportedTheta";
    case ErrorCode::kDimensionTooLarge: return "DimensionTooLarge";
    case ErrorCode::kBadPrime: return "BadPrime";
    case ErrorCode::kNotSemistable: return "NotSemistable";
    case ErrorCode::kNotStable: return "NotStable";
    case ErrorCode::kNotStableForSource: return "NotStableForSource";
    case ErrorCode::kRepresentativeDependence: return "RepresentativeDependence";
    case ErrorCode::kTruncationNotReached: return "TruncationNotReached";
    case ErrorCode::kNoTermination: return "NoTermination";
    case ErrorCode::kNotEquivariant: return "NotEquivariant";
    case ErrorCode::kMomentMapNonzero: return "MomentMapNonzero";
    case ErrorCode::kNotAQuotient: return "NotAQuotient";
    case ErrorCode::kUnsupportedCorner: return "UnsupportedCorner";
    case ErrorCode::kRelationViolation: return "RelationViolation";
    case ErrorCode::kParse: return "ParseError";
    case ErrorCode::kUsage: return "UsageError";
  }
  return "Unknown";
}

}  // namespace mckay
