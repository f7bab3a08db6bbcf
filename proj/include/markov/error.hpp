#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace markov {

enum class ErrorCode {
  ParseError,
  StrandMismatch,
  NotDestabilizable,
  TooFewStrands,
  NonExactDivision,
  NotAKnot,
  NotABArc,
  EssentialArc,
  SelfAdjacentTiles,
  NonLocalConfiguration,
  NotAbTile,
  NotEndTile,
  NonAaTilesPresent,
  InvalidTiling,
  StuckNoAbTile,
  LedgerMismatch,
  MoveInapplicable,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code);

/// Single exception type for the library; `code()` identifies the failure.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

}  // namespace markov
