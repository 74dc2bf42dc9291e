#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dynirr {

enum class ErrorCode {
  InvalidField,
  BadModulus,
  InversionOfZero,
  ElementFromWrongField,
  ChainTooLong,
  MixedFields,
  InternalBoundExceeded,
  GuardExceeded,
  CommonCViolated,
  HIsSquare,
  HIsZero,
  PNotOneModFour,
  ModulusNotIrreducible,
  PreconditionFailed,
  NoAdmissibleA,
  NoAdmissibleB,
  ParseError,
  CoefficientOutOfRange,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code),
        detail_(what) {}

  ErrorCode code() const noexcept { return code_; }
  /// The message without the code prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

/// Input-format failure with the 1-based line number it was detected on.
class ParseError : public Error {
 public:
  ParseError(ErrorCode code, std::size_t line, const std::string& what)
      : Error(code, "line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace dynirr
