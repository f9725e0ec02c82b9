#include "sumnet/error.hpp"

namespace sumnet {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::CycleDetected: return "CycleDetected";
    case ErrorCode::UnknownNode: return "UnknownNode";
    case ErrorCode::UnknownEdge: return "UnknownEdge";
    case ErrorCode::NotThreeByThree: return "NotThreeByThree";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::InvalidField: return "InvalidField";
    case ErrorCode::InvalidAlpha: return "InvalidAlpha";
    case ErrorCode::CodeShapeMismatch: return "CodeShapeMismatch";
    case ErrorCode::InputCodeInvalid: return "InputCodeInvalid";
    case ErrorCode::NoValidPaths: return "NoValidPaths";
    case ErrorCode::InvalidWitness: return "InvalidWitness";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::SearchSpaceTooLarge: return "SearchSpaceTooLarge";
    case ErrorCode::GenerationFailed: return "GenerationFailed";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ValidationError: return "ValidationError";
    case ErrorCode::ClassMismatch: return "ClassMismatch";
  }
  return "Unknown";
}

}  // namespace sumnet
