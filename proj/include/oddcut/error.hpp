#pragma once

#include <stdexcept>
#include <string>

namespace oddcut {

enum class ErrorCode {
  BadNodeId,
  CycleDetected,
  SelfLoop,
  SameNode,
  ExplosionCap,
  TerminalInZ,
  ProtectedViolation,
  NotASeparator,
  ExhaustiveTooLarge,
  NotADag,
  NotNodeKind,
  TooLarge,
  TooFewTerminals,
  NotOddPath,
  InfeasibleCertificate,
  PathNotTight,
  ParseError,
  InvalidArgument,
};

const char* to_string(ErrorCode code);

class OddcutError : public std::runtime_error {
 public:
  OddcutError(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

/// Raised by the text parsers; `line()` is 1-based.
class ParseError : public OddcutError {
 public:
  ParseError(int line, const std::string& what)
      : OddcutError(ErrorCode::ParseError,
                    "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw OddcutError(code, what);
}

}  // namespace oddcut
