#include "skoszul/error.hpp"

namespace skoszul {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::UndefinedColon: return "UndefinedColon";
    case ErrorCode::InvalidExponent: return "InvalidExponent";
    case ErrorCode::ExponentOverflow: return "ExponentOverflow";
    case ErrorCode::NotStructural: return "NotStructural";
    case ErrorCode::CharacteristicMismatch: return "CharacteristicMismatch";
    case ErrorCode::EndoMismatch: return "EndoMismatch";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::LevelOutOfRange: return "LevelOutOfRange";
    case ErrorCode::NoSolution: return "NoSolution";
    case ErrorCode::NonHomogeneous: return "NonHomogeneous";
    case ErrorCode::NotACycle: return "NotACycle";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
    case ErrorCode::NonMonomialSequence: return "NonMonomialSequence";
    case ErrorCode::FieldUnsupported: return "FieldUnsupported";
    case ErrorCode::DegenerateIdeal: return "DegenerateIdeal";
    case ErrorCode::EmptySequence: return "EmptySequence";
    case ErrorCode::InvalidField: return "InvalidField";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

}  // namespace skoszul
