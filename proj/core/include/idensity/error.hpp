#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace idensity {

/// Stable error categories. The CLI maps these onto process exit codes.
enum class ErrorCode {
  Parse,
  UnsupportedSparseIntersection,
  NormalizationOverflow,
  PartitionViolation,
  GrammarOverflow,
  MalformedInterval,
  InvalidGenerator,
  PreconditionViolation,
  InvariantBreach,
  GoldenMismatch,
};

std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Parse failure with a 1-based source position.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error(ErrorCode::Parse, message + " at " + std::to_string(line) + ":" +
                                    std::to_string(column)),
        detail_(message),
        line_(line),
        column_(column) {}

  /// The message without the position suffix.
  const std::string& detail() const noexcept { return detail_; }

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::string detail_;
  std::size_t line_;
  std::size_t column_;
};

}  // namespace idensity
