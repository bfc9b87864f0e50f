#include "belyi/error.hpp"

namespace belyi {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "INVALID_ARGUMENT";
    case ErrorCode::DegreeMismatch: return "DEGREE_MISMATCH";
    case ErrorCode::PointOutOfRange: return "POINT_OUT_OF_RANGE";
    case ErrorCode::Syntax: return "SYNTAX";
    case ErrorCode::BadTriple: return "BAD_TRIPLE";
    case ErrorCode::MisplacedPrimitive: return "MISPLACED_PRIM";
    case ErrorCode::Empty: return "EMPTY";
    case ErrorCode::BadWord: return "BAD_WORD";
    case ErrorCode::NotPrime: return "NOT_PRIME";
    case ErrorCode::NonConverged: return "NON_CONVERGED";
    case ErrorCode::ClusteredRoots: return "CLUSTERED_ROOTS";
    case ErrorCode::PointOffCurve: return "POINT_OFF_CURVE";
    case ErrorCode::NearBranch: return "NEAR_BRANCH";
    case ErrorCode::Collision: return "COLLISION";
    case ErrorCode::StepUnderflow: return "STEP_UNDERFLOW";
    case ErrorCode::MatchAmbiguous: return "MATCH_AMBIGUOUS";
    case ErrorCode::NotBijective: return "NOT_BIJECTIVE";
    case ErrorCode::NotBelyi: return "NOT_BELYI";
    case ErrorCode::NotConnected: return "NOT_CONNECTED";
    case ErrorCode::CleannessRequired: return "CLEANNESS_REQUIRED";
    case ErrorCode::EvidenceIncomplete: return "EVIDENCE_INCOMPLETE";
  }
  return "UNKNOWN";
}

}  // namespace belyi
