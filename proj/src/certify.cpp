#include "markov/certify.hpp"

#include <sstream>

#include "markov/error.hpp"
#include "markov/invariants.hpp"

namespace markov {

std::string_view to_string(MoveKind kind) {
  switch (kind) {
    case MoveKind::stabilize: return "stabilize";
    case MoveKind::destabilize: return "destabilize";
    case MoveKind::conjugate: return "conjugate";
    case MoveKind::cyclic_rotate: return "cyclic_rotate";
  }
  return "?";
}

MoveKind move_kind_from_string(std::string_view text) {
  for (MoveKind k : {MoveKind::stabilize, MoveKind::destabilize, MoveKind::conjugate, MoveKind::cyclic_rotate}) {
    if (to_string(k) == text) return k;
  }
  throw Error(ErrorCode::ParseError, "unknown move kind '" + std::string(text) + "'");
}

std::vector<int> MoveCertificate::ledger_trace() const {
  std::vector<int> trace{initial_index};
  for (const auto& m : moves) {
    int next = trace.back();
    if (m.kind == MoveKind::stabilize) ++next;
    if (m.kind == MoveKind::destabilize) --next;
    trace.push_back(next);
  }
  return trace;
}

int MoveCertificate::stabilization_count() const {
  int n = 0;
  for (const auto& m : moves) n += m.kind == MoveKind::stabilize ? 1 : 0;
  return n;
}

int MoveCertificate::destabilization_count() const {
  int n = 0;
  for (const auto& m : moves) n += m.kind == MoveKind::destabilize ? 1 : 0;
  return n;
}

BraidWord apply_move(const BraidWord& word, const Move& move) {
  switch (move.kind) {
    case MoveKind::stabilize:
      if (!move.sign || (*move.sign != 1 && *move.sign != -1)) {
        throw Error(ErrorCode::InvalidArgument, "stabilize needs a sign of +1 or -1");
      }
      return stabilize(word, *move.sign);
    case MoveKind::destabilize:
      if (move.sign && !word.empty() && word.letters().back().sign != *move.sign) {
        throw Error(ErrorCode::NotDestabilizable, "final letter has sign " +
                                                      std::to_string(word.letters().back().sign) +
                                                      ", move says " + std::to_string(*move.sign));
      }
      return destabilize(word);
    case MoveKind::conjugate:
      if (!move.witness) throw Error(ErrorCode::InvalidArgument, "conjugate needs a witness");
      return conjugate(word, *move.witness);
    case MoveKind::cyclic_rotate:
      return word.empty() ? word : cyclic_rotate(word);
  }
  throw Error(ErrorCode::InvalidArgument, "unknown move kind");
}

BraidWord apply_certificate(const BraidWord& start, const MoveCertificate& cert) {
  if (start.strands() != cert.initial_index) {
    throw Error(ErrorCode::LedgerMismatch, "certificate starts at index " + std::to_string(cert.initial_index) +
                                               ", word has " + std::to_string(start.strands()) + " strands");
  }
  BraidWord w = start;
  for (std::size_t i = 0; i < cert.moves.size(); ++i) {
    try {
      w = apply_move(w, cert.moves[i]);
    } catch (const Error& e) {
      throw Error(ErrorCode::MoveInapplicable, "move " + std::to_string(i) + " (" +
                                                   std::string(to_string(cert.moves[i].kind)) + "): " + e.what());
    }
  }
  return w;
}

std::string VerificationReport::to_string() const {
  std::ostringstream out;
  out << "verdict: " << (accepted() ? "accept" : "reject") << '\n';
  if (replayed) {
    out << "endpoint: " << endpoint->to_string() << (endpoint_matches ? " (matches)" : " (differs)") << '\n';
  } else {
    out << "replay failed: " << replay_error << '\n';
  }
  out << "components agree: " << (components_agree ? "yes" : "no") << '\n';
  if (alexander_checked) out << "alexander agrees: " << (alexander_agree ? "yes" : "no") << '\n';
  if (alarm) out << "ALARM: accepted certificate but invariants disagree\n";
  out << "ledger:";
  for (std::size_t i = 0; i < ledger_trace.size(); ++i) out << (i ? " -> " : " ") << ledger_trace[i];
  out << '\n';
  return out.str();
}

VerificationReport verify_equivalence(const BraidWord& a, const BraidWord& b, const MoveCertificate& cert) {
  VerificationReport r;
  r.ledger_trace = cert.ledger_trace();
  try {
    r.endpoint = apply_certificate(a, cert);
    r.replayed = true;
    r.endpoint_matches = r.endpoint->strands() == b.strands() && words_equal(*r.endpoint, b);
  } catch (const Error& e) {
    r.replay_error = e.what();
  }

  const int ca = closure_component_count(a);
  const int cb = closure_component_count(b);
  r.components_agree = ca == cb;
  bool invariants_ok = r.components_agree;
  if (ca == 1 && cb == 1) {
    r.alexander_checked = true;
    try {
      r.alexander_agree = alexander_of_closure(a).polynomial == alexander_of_closure(b).polynomial;
    } catch (const Error&) {
      r.alexander_agree = false;
    }
    invariants_ok = invariants_ok && r.alexander_agree;
  }
  r.alarm = r.accepted() && !invariants_ok;
  return r;
}

MoveCertificate certificate_from_disc(const Tiling& t) { return simplify_disc(t).certificate; }

}  // namespace markov
