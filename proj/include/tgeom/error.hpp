#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace tgeom {

enum class ErrorCode {
  kDuplicateLabel,
  kDuplicateEntry,
  kConflictingEntry,
  kMissingEntry,
  kNonzeroDiagonal,
  kNonFiniteValue,
  kDimensionMismatch,
  kEmptySpace,
  kInvalidGrid,
  kUnknownPoint,
  kChainMismatch,
  kNotGuaranteed,
  kSearchLimitExceeded,
  kOracleLimitExceeded,
  kInvalidArgument,
  kParse,
};

std::string_view to_string(ErrorCode code);

// Every failure in the library is reported through this type; `code()` lets
// callers (the CLI in particular) map failures onto stable exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Raised by the σ-table reader. `line()` is 1-based; 0 means the problem is
// not tied to a single line (e.g. a missing pair).
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : Error(ErrorCode::kParse, format(line, message)), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  static std::string format(std::size_t line, const std::string& message) {
    return line == 0 ? message : "line " + std::to_string(line) + ": " + message;
  }

  std::size_t line_;
};

}  // namespace tgeom
