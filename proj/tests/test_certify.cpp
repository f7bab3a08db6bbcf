#include "doctest.h"
#include "markov/certify.hpp"
#include "markov/error.hpp"
#include "markov/invariants.hpp"
#include "support.hpp"

using namespace markov;

namespace {

BraidWord W(const char* text) { return BraidWord::parse(text); }

MoveCertificate cert(int index, std::vector<Move> moves) { return {index, std::move(moves)}; }

}  // namespace

TEST_CASE("move kind names") {
  for (MoveKind k : {MoveKind::stabilize, MoveKind::destabilize, MoveKind::conjugate, MoveKind::cyclic_rotate}) {
    CHECK(move_kind_from_string(to_string(k)) == k);
  }
  CHECK_THROWS_AS(move_kind_from_string("flip"), Error);
}

TEST_CASE("apply_certificate examples") {
  CHECK(apply_certificate(W("B2: s1"), cert(2, {Move::stabilization(1)})) == W("B3: s1 s2"));
  CHECK(apply_certificate(W("B1:"), cert(1, {Move::stabilization(1), Move::stabilization(1)})) == W("B3: s1 s2"));
  try {
    (void)apply_certificate(W("B2: s1 s1"), cert(2, {Move::destabilization()}));
    FAIL("destabilized twice-occurring s1");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::MoveInapplicable);
    CHECK(std::string(e.what()).find("move 0") != std::string::npos);
    CHECK(std::string(e.what()).find("occurs 2") != std::string::npos);
  }
  try {
    (void)apply_certificate(W("B2: s1"), cert(3, {}));
    FAIL("ledger mismatch accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::LedgerMismatch);
  }
}

TEST_CASE("individual moves") {
  CHECK(apply_move(W("B3: s1 s2"), Move::conjugation(W("B3: s1"))) == W("B3: s1 s1 s2 s1^-1"));
  CHECK(apply_move(W("B3: s2 s1"), Move::rotation()) == W("B3: s1 s2"));
  CHECK(apply_move(W("B2:"), Move::rotation()) == W("B2:"));
  CHECK(apply_move(W("B2: s1^-1"), Move::destabilization(-1)) == W("B1:"));
  CHECK_THROWS_AS(apply_move(W("B2: s1^-1"), Move::destabilization(1)), Error);
  CHECK_THROWS_AS(apply_move(W("B2: s1"), Move::conjugation(W("B3: s1"))), Error);
  CHECK_THROWS_AS(apply_move(W("B2: s1"), Move{MoveKind::stabilize, std::nullopt, std::nullopt}), Error);
  CHECK_THROWS_AS(apply_move(W("B2: s1"), Move{MoveKind::conjugate, std::nullopt, std::nullopt}), Error);
}

TEST_CASE("verify_equivalence examples") {
  auto r = verify_equivalence(W("B1:"), W("B2: s1"), cert(1, {Move::stabilization(1)}));
  CHECK(r.accepted());
  CHECK_FALSE(r.alarm);
  CHECK(r.ledger_trace == std::vector<int>{1, 2});

  r = verify_equivalence(W("B2: s1"), W("B2: s1^-1"), cert(2, {}));
  CHECK_FALSE(r.accepted());
  CHECK(r.replayed);

  r = verify_equivalence(W("B3: s1 s2 s1"), W("B3: s2 s1 s2"), cert(3, {}));
  CHECK(r.accepted());

  r = verify_equivalence(W("B2: s1"), W("B2: s1"), cert(1, {}));
  CHECK_FALSE(r.accepted());
  CHECK_FALSE(r.replayed);
  CHECK(r.replay_error.find("LedgerMismatch") != std::string::npos);

  r = verify_equivalence(W("B2: s1"), W("B3: s1"), cert(2, {}));
  CHECK_FALSE(r.accepted());
  CHECK(r.to_string().find("verdict: reject") != std::string::npos);
}

TEST_CASE("round trip: replayed endpoints are accepted") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    const BraidWord a = support::random_word_upto(rng, 4, 8);
    const MoveCertificate c = support::random_certificate(rng, a, 6);
    const BraidWord b = apply_certificate(a, c);
    const auto r = verify_equivalence(a, b, c);
    CAPTURE(a.to_string());
    CHECK(r.accepted());
    CHECK_FALSE(r.alarm);
    CHECK(r.components_agree);
    CHECK(c.initial_index + c.stabilization_count() - c.destabilization_count() == b.strands());
    CHECK(r.ledger_trace.back() == b.strands());
  }
}

TEST_CASE("soundness: mismatched invariants are never accepted") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 500; ++trial) {
    const BraidWord a = support::random_word_upto(rng, 4, 8);
    const BraidWord b = support::random_word_upto(rng, 4, 8);
    const MoveCertificate c = rng() % 2 ? support::random_certificate(rng, a, 4) : MoveCertificate{a.strands(), {}};
    const auto r = verify_equivalence(a, b, c);
    const bool same_components = closure_component_count(a) == closure_component_count(b);
    const bool same_alexander = alexander_of_closure(a).polynomial == alexander_of_closure(b).polynomial;
    if (!same_components || !same_alexander) CHECK_FALSE(r.accepted());
    CHECK_FALSE(r.alarm);
  }
}

TEST_CASE("certificates from discs") {
  auto c = certificate_from_disc(radial_disc());
  CHECK(c.moves.empty());
  CHECK(c.initial_index == 1);

  c = certificate_from_disc(support::two_vertex_disc());
  CHECK(c.initial_index == 2);
  CHECK(c.destabilization_count() == 1);
  CHECK(c.moves.size() == 1);

  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 30; ++trial) {
    const Tiling t = grow_disc(radial_disc(), random_grow_script(30, rng()), rng());
    c = certificate_from_disc(t);
    CHECK(c.initial_index == ledger_index(t));
    CHECK(c.ledger_trace().back() == 1);
  }
  Tiling broken = support::two_vertex_disc();
  broken.chi = 3;
  CHECK_THROWS_AS(certificate_from_disc(broken), Error);
}

TEST_CASE("a disc certificate replays on a braid of matching index") {
  // The two-vertex disc bounds the unknot B2: s1^-1 (sign of its singularity).
  const auto c = certificate_from_disc(support::two_vertex_disc(-1));
  CHECK(apply_certificate(W("B2: s1^-1"), c) == W("B1:"));
  CHECK(verify_equivalence(W("B2: s1^-1"), W("B1:"), c).accepted());
}
