#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace skoszul {

enum class ErrorCode {
  ArityMismatch,
  UndefinedColon,
  InvalidExponent,
  ExponentOverflow,
  NotStructural,
  CharacteristicMismatch,
  EndoMismatch,
  ShapeMismatch,
  LevelOutOfRange,
  NoSolution,
  NonHomogeneous,
  NotACycle,
  InvariantViolation,
  NonMonomialSequence,
  FieldUnsupported,
  DegenerateIdeal,
  EmptySequence,
  InvalidField,
  ParseError,
  DivisionByZero,
};

std::string_view to_string(ErrorCode code);

// Every failure raised by the library carries one of the codes above so that
// callers (and tests) can dispatch on the kind rather than on message text.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace skoszul
