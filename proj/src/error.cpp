#include "oddcut/error.hpp"

namespace oddcut {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::BadNodeId: return "BadNodeId";
    case ErrorCode::CycleDetected: return "CycleDetected";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::SameNode: return "SameNode";
    case ErrorCode::ExplosionCap: return "ExplosionCap";
    case ErrorCode::TerminalInZ: return "TerminalInZ";
    case ErrorCode::ProtectedViolation: return "ProtectedViolation";
    case ErrorCode::NotASeparator: return "NotASeparator";
    case ErrorCode::ExhaustiveTooLarge: return "ExhaustiveTooLarge";
    case ErrorCode::NotADag: return "NotADag";
    case ErrorCode::NotNodeKind: return "NotNodeKind";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::TooFewTerminals: return "TooFewTerminals";
    case ErrorCode::NotOddPath: return "NotOddPath";
    case ErrorCode::InfeasibleCertificate: return "InfeasibleCertificate";
    case ErrorCode::PathNotTight: return "PathNotTight";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace oddcut
