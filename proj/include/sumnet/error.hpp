#pragma once

#include <stdexcept>
#include <string>

namespace sumnet {

enum class ErrorCode {
  CycleDetected,
  UnknownNode,
  UnknownEdge,
  NotThreeByThree,
  FieldMismatch,
  DivisionByZero,
  InvalidField,
  InvalidAlpha,
  CodeShapeMismatch,
  InputCodeInvalid,
  NoValidPaths,
  InvalidWitness,
  InvalidArgument,
  SearchSpaceTooLarge,
  GenerationFailed,
  ParseError,
  ValidationError,
  ClassMismatch,
};

const char* to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above so the
/// C layer can map it onto a stable status value.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Parse failures also remember where in the input they happened (1-based).
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : Error(ErrorCode::ParseError,
              "line " + std::to_string(line) + ", column " +
                  std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace sumnet
