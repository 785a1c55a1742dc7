#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hiero {

enum class ErrorCode {
  InvalidArgument,
  ZeroPolynomial,
  ContainsUnit,
  NotMinimal,
  NothingToPolarize,
  NotSquarefree,
  TooManyGenerators,
  NotStandardGrading,
  NonPositiveGrading,
  UnequalTotalDegrees,
  NotHomogeneous,
  MissingGridMetadata,
  BadDimensions,
  TooLarge,
  Overflow,
  SyntaxError,
  UndeclaredVariable,
  DuplicateVariable,
};

std::string_view to_string(ErrorCode code) noexcept;

/// The single exception type thrown by the library. The code identifies the
/// failure class; the message carries the details.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

  /// True for failures caused by malformed user input (bad files, bad
  /// declarations) rather than by the computation itself.
  bool is_input_error() const noexcept {
    return code_ == ErrorCode::SyntaxError ||
           code_ == ErrorCode::UndeclaredVariable ||
           code_ == ErrorCode::DuplicateVariable ||
           code_ == ErrorCode::NonPositiveGrading;
  }

 private:
  ErrorCode code_;
};

/// Parse failure with a 1-based source position.
class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& what, int line, int column)
      : Error(ErrorCode::SyntaxError, format(what, line, column)),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  static std::string format(const std::string& what, int line, int column) {
    return std::to_string(line) + ":" + std::to_string(column) + ": " + what;
  }

  int line_;
  int column_;
};

}  // namespace hiero
