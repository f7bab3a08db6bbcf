#include "doctest.h"
#include "markov/braid.hpp"
#include "markov/error.hpp"
#include "support.hpp"

using namespace markov;

namespace {

BraidWord W(const char* text) { return BraidWord::parse(text); }

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("parse and print") {
  const BraidWord w = W("B3: s1 s2^-1 s1 s1");
  CHECK(w.strands() == 3);
  CHECK(w.length() == 4);
  CHECK(w.letters()[1] == Generator{2, -1});
  CHECK(w.to_string() == "B3: s1 s2^-1 s1 s1");
  CHECK(W("B1:").empty());
  CHECK(W("B1:").to_string() == "B1:");
  CHECK(W("  B4:s3   s1^-1 ").to_string() == "B4: s3 s1^-1");
}

TEST_CASE("parse rejects malformed text with a column") {
  for (const char* bad : {"", "s1 s2", "B0:", "B3 s1", "B3: s3", "B3: s0", "B3: s1^2", "B3: t1", "B3: s1s2", "B2: s1^-"}) {
    CAPTURE(bad);
    CHECK(code_of([&] { (void)W(bad); }) == ErrorCode::ParseError);
  }
  try {
    (void)W("B3: s1 s7");
    FAIL("accepted s7 in B3");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("column") != std::string::npos);
  }
}

TEST_CASE("constructor validates indices") {
  CHECK(code_of([] { BraidWord(2, {{2, 1}}); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { BraidWord(3, {{1, 0}}); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { BraidWord(0); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("compose") {
  CHECK(compose(W("B3: s1"), W("B3: s2")) == W("B3: s1 s2"));
  CHECK(compose(W("B2:"), W("B2: s1")) == W("B2: s1"));
  CHECK(code_of([] { compose(W("B2: s1"), W("B3: s1")); }) == ErrorCode::StrandMismatch);
}

TEST_CASE("inverse") {
  CHECK(inverse(W("B3: s1 s2")) == W("B3: s2^-1 s1^-1"));
  CHECK(inverse(W("B2:")) == W("B2:"));
  CHECK(inverse(W("B2: s1^-1")) == W("B2: s1"));
}

TEST_CASE("free_reduce") {
  CHECK(free_reduce(W("B3: s1 s1^-1 s2")) == W("B3: s2"));
  CHECK(free_reduce(W("B2: s1 s1")) == W("B2: s1 s1"));
  CHECK(free_reduce(W("B3: s2 s1 s1^-1 s2^-1")) == W("B3:"));
}

TEST_CASE("permutation_of") {
  CHECK(permutation_of(W("B2: s1")) == Permutation({1, 0}));
  // Read as j -> images[j]: 1 -> 2 -> 3 -> 1. The strand ending at
  // position 1 started at position 2.
  const Permutation p = permutation_of(W("B3: s1 s2"));
  CHECK(p == Permutation({1, 2, 0}));
  CHECK(p.cycle_count() == 1);
  CHECK(permutation_of(W("B3:")) == Permutation::identity(3));
  CHECK(code_of([] { Permutation({0, 0}); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("closure components and exponent sum") {
  CHECK(closure_component_count(W("B3:")) == 3);
  CHECK(closure_component_count(W("B2: s1")) == 1);
  CHECK(closure_component_count(W("B2: s1 s1")) == 2);
  CHECK(exponent_sum(W("B3: s1 s2^-1")) == 0);
  CHECK(exponent_sum(W("B2: s1 s1 s1")) == 3);
  CHECK(exponent_sum(W("B2:")) == 0);
}

TEST_CASE("conjugate and cyclic_rotate") {
  CHECK(conjugate(W("B2: s1"), W("B2: s1")) == W("B2: s1"));
  CHECK(conjugate(W("B3: s1"), W("B3: s2")) == W("B3: s2 s1 s2^-1"));
  CHECK(code_of([] { conjugate(W("B3: s1"), W("B2: s1")); }) == ErrorCode::StrandMismatch);
  CHECK(cyclic_rotate(W("B3: s1 s2 s2^-1")) == W("B3: s2 s2^-1 s1"));
}

TEST_CASE("stabilize and destabilize") {
  CHECK(stabilize(W("B2: s1"), 1) == W("B3: s1 s2"));
  CHECK(stabilize(W("B1:"), -1) == W("B2: s1^-1"));
  CHECK(stabilize(W("B3: s1 s2"), 1) == W("B4: s1 s2 s3"));
  CHECK(destabilize(W("B3: s1 s2")) == W("B2: s1"));
  CHECK(destabilize(W("B2: s1^-1")) == W("B1:"));
  CHECK(code_of([] { destabilize(W("B3: s2 s1 s2")); }) == ErrorCode::NotDestabilizable);
  CHECK(code_of([] { destabilize(W("B3: s2 s1")); }) == ErrorCode::NotDestabilizable);
  CHECK(code_of([] { destabilize(W("B1:")); }) == ErrorCode::NotDestabilizable);
  CHECK(code_of([] { stabilize(W("B1:"), 0); }) == ErrorCode::InvalidArgument);

  BraidWord w = W("B3: s2 s1 s1");
  CHECK(rotate_to_destabilizable(w) == 1);
  CHECK(w == W("B3: s1 s1 s2"));
  CHECK(destabilize(w) == W("B2: s1 s1"));
}

TEST_CASE("connect_sum") {
  CHECK(connect_sum(W("B2: s1 s1 s1"), W("B2: s1 s1 s1")) == W("B3: s1 s1 s1 s2 s2 s2"));
  CHECK(connect_sum(W("B2: s1"), W("B1:")) == W("B2: s1"));
  CHECK(connect_sum(W("B1:"), W("B3: s1 s2")) == W("B3: s1 s2"));
}

TEST_CASE("random words: algebraic identities") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const BraidWord a = support::random_word_upto(rng, 6, 12);
    const BraidWord b = support::random_word(rng, a.strands(), 8);
    CAPTURE(a.to_string());
    CAPTURE(b.to_string());
    CHECK(BraidWord::parse(a.to_string()) == a);
    CHECK(permutation_of(compose(a, b)) == permutation_of(a) * permutation_of(b));
    CHECK(free_reduce(compose(a, inverse(a))).empty());
    CHECK(exponent_sum(inverse(a)) == -exponent_sum(a));
    CHECK(closure_component_count(conjugate(a, b)) == closure_component_count(a));
    for (int s : {1, -1}) {
      const BraidWord st = stabilize(a, s);
      CHECK(st.strands() == a.strands() + 1);
      CHECK(destabilize(st) == a);
      CHECK(closure_component_count(st) == closure_component_count(a));
    }
  }
}
