#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace wittcv {

enum class ErrorCode {
  NotPrime,
  CharTooSmall,
  DegreeUnsupported,
  DivisionByZero,
  NotSquare,
  DimensionMismatch,
  SizeOverflow,
  ContextMismatch,
  NotADerivation,
  OutOfLemmaScope,
  NotInvertible,
  BadLength,
  NotRectifiable,
  BadIndex,
  Singular,
  ParseError,
};

std::string_view to_string(ErrorCode code);

/// Single exception type for the library; callers branch on code().
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Aborts on violated internal invariants (never on bad user input).
[[noreturn]] void internal_failure(const char* what);

}  // namespace wittcv
