#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "markov/braid.hpp"

namespace markov {

enum class MoveKind { stabilize, destabilize, conjugate, cyclic_rotate };

std::string_view to_string(MoveKind kind);
MoveKind move_kind_from_string(std::string_view text);  // throws ParseError

/// One Markov move. `sign` is required for stabilize; for destabilize it is
/// optional and, when present, must match the sign of the removed letter.
struct Move {
  MoveKind kind = MoveKind::stabilize;
  std::optional<int> sign;
  std::optional<BraidWord> witness;  // conjugate only

  static Move stabilization(int s) { return {MoveKind::stabilize, s, std::nullopt}; }
  static Move destabilization(std::optional<int> s = std::nullopt) {
    return {MoveKind::destabilize, s, std::nullopt};
  }
  static Move conjugation(BraidWord g) { return {MoveKind::conjugate, std::nullopt, std::move(g)}; }
  static Move rotation() { return {MoveKind::cyclic_rotate, std::nullopt, std::nullopt}; }

  friend bool operator==(const Move&, const Move&) = default;
};

struct MoveCertificate {
  int initial_index = 1;
  std::vector<Move> moves;

  /// Braid index after each prefix of moves, starting with initial_index.
  std::vector<int> ledger_trace() const;
  int stabilization_count() const;
  int destabilization_count() const;

  friend bool operator==(const MoveCertificate&, const MoveCertificate&) = default;
};

}  // namespace markov
