#include "atmatch/error.hpp"

namespace atmatch {

std::string_view error_code_name(ErrorCode code) {
    switch (code) {
    case ErrorCode::LoopEdge: return "LoopEdge";
    case ErrorCode::ParallelEdge: return "ParallelEdge";
    case ErrorCode::AsymmetricRotation: return "AsymmetricRotation";
    case ErrorCode::EulerViolation: return "EulerViolation";
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::InvalidAnchor: return "InvalidAnchor";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::NotSimpleBoundary: return "NotSimpleBoundary";
    case ErrorCode::NotAChord: return "NotAChord";
    case ErrorCode::EdgeOnChordSide: return "EdgeOnChordSide";
    case ErrorCode::HasChord: return "HasChord";
    case ErrorCode::BoundaryNotSimple: return "BoundaryNotSimple";
    case ErrorCode::EdgeNotOnBoundary: return "EdgeNotOnBoundary";
    case ErrorCode::NegativeExponent: return "NegativeExponent";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::SearchBudgetExceeded: return "SearchBudgetExceeded";
    case ErrorCode::InternalProofViolation: return "InternalProofViolation";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::UnknownName: return "UnknownName";
    case ErrorCode::UsageError: return "UsageError";
    }
    return "Unknown";
}

}  // namespace atmatch
