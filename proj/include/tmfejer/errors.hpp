#pragma once

#include <stdexcept>
#include <string>

namespace tmfejer {

enum class ErrorCode {
  kInvalidArgument,
  kPoleProximity,
  kIndexOutOfRange,
  kExtendedOffCircle,
  kDiagonalSingularity,
  kCriticalPoint,
  kNearBoundary,
  kNoConvergence,
  kParseError,
  kValidationError,
};

const char* to_string(ErrorCode code);

/// Base error for every failure raised by the library.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code),
        message_(what) {}

  ErrorCode code() const noexcept { return code_; }
  /// Message without the error-code prefix.
  const std::string& message() const noexcept { return message_; }

 private:
  ErrorCode code_;
  std::string message_;
};

/// Config problem located either by line (parse) or by field path (validation).
class ConfigError : public Error {
 public:
  ConfigError(ErrorCode code, const std::string& what, int line, std::string field)
      : Error(code, what), line_(line), field_(std::move(field)) {}

  int line() const noexcept { return line_; }
  const std::string& field() const noexcept { return field_; }

 private:
  int line_;
  std::string field_;
};

}  // namespace tmfejer
