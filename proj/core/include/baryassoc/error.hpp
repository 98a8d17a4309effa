#pragma once

#include <stdexcept>
#include <string>

namespace baryassoc {

enum class ErrorCode {
  RingMismatch,
  InvalidArgument,
  MissingAssignment,
  ArityMismatch,
  NotConstant,
  DeltaNotInvertible,
  TailLengthMismatch,
  DegreeTooLow,
  ArityOutOfRange,
  ConstantMember,
  SearchSpaceTooLarge,
};

const char* to_string(ErrorCode code);

// Every library failure is reported through this type; `code()` identifies
// the contract that was violated.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace baryassoc
