#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace belyi {

// Every failure the core can report. The C API mirrors these one-to-one.
enum class ErrorCode {
  InvalidArgument,
  DegreeMismatch,
  PointOutOfRange,
  Syntax,
  BadTriple,
  MisplacedPrimitive,
  Empty,
  BadWord,
  NotPrime,
  NonConverged,
  ClusteredRoots,
  PointOffCurve,
  NearBranch,
  Collision,
  StepUnderflow,
  MatchAmbiguous,
  NotBijective,
  NotBelyi,
  NotConnected,
  CleannessRequired,
  EvidenceIncomplete,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Syntax errors carry the 0-based offset into the parsed text.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, const std::string& message)
      : Error(ErrorCode::Syntax, message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace belyi
