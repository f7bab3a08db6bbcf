#pragma once

#include <optional>
#include <string>
#include <vector>

#include "markov/braid.hpp"
#include "markov/foliation.hpp"
#include "markov/move.hpp"

namespace markov {

/// One move on a braid word; errors from braid_core propagate unchanged.
BraidWord apply_move(const BraidWord& word, const Move& move);

/// Replays the certificate from `start`. Throws LedgerMismatch when the
/// strand count differs from initial_index, and MoveInapplicable naming the
/// 0-based move index and the reason otherwise.
BraidWord apply_certificate(const BraidWord& start, const MoveCertificate& cert);

struct VerificationReport {
  bool replayed = false;
  std::string replay_error;
  std::optional<BraidWord> endpoint;
  bool endpoint_matches = false;

  bool components_agree = false;
  bool alexander_checked = false;  // only when both closures are knots
  bool alexander_agree = false;
  /// Accepted but the invariants disagree. Never expected.
  bool alarm = false;

  std::vector<int> ledger_trace;

  bool accepted() const noexcept { return replayed && endpoint_matches; }
  std::string to_string() const;
};

VerificationReport verify_equivalence(const BraidWord& a, const BraidWord& b, const MoveCertificate& cert);

/// Simplifies the disc and keeps the move certificate. Throws InvalidTiling.
MoveCertificate certificate_from_disc(const Tiling& t);

}  // namespace markov
