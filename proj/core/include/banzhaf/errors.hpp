#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace banzhaf {

enum class ErrorCode {
  EmptyPlayerSet,
  QuotaOutOfRange,
  NegativeWeight,
  WeightOverflow,
  IndexOutOfRange,
  PlayerNotInCoalition,
  TooManyPlayersForOracle,
  QuotaTooLargeForDenseTable,
  NotDivisible,
  LengthMismatch,
  NotSorted,
  SyntaxError,
};

/// Library error. `code()` identifies the condition; the message carries
/// instance detail (offending value, position, ...).
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

/// Parse failure with a byte offset into the source text.
class SyntaxError : public Error {
public:
  SyntaxError(const std::string& what, std::size_t position)
      : Error(ErrorCode::SyntaxError,
              what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

}  // namespace banzhaf
