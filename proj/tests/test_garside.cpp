#include "doctest.h"
#include "markov/braid.hpp"
#include "support.hpp"
#include "word_search.hpp"

using namespace markov;

namespace {
BraidWord W(const char* text) { return BraidWord::parse(text); }
}  // namespace

TEST_CASE("normal form examples") {
  CHECK(normal_form(W("B3: s1 s2 s1")) == normal_form(W("B3: s2 s1 s2")));
  CHECK(normal_form(W("B4: s1 s3")) == normal_form(W("B4: s3 s1")));
  CHECK(normal_form(W("B2: s1 s1^-1")) == normal_form(W("B2:")));
  CHECK(normal_form(W("B2:")).empty());
  CHECK(words_equal(W("B3: s1 s2 s1"), W("B3: s2 s1 s2")));
  CHECK_FALSE(words_equal(W("B2: s1"), W("B2: s1^-1")));
  CHECK(words_equal(W("B3: s1 s1^-1"), W("B3:")));
  CHECK_THROWS_AS(words_equal(W("B2:"), W("B3:")), Error);
}

TEST_CASE("garside form of Delta and its inverse") {
  const GarsideForm delta = garside_form(W("B3: s1 s2 s1"));
  CHECK(delta.delta_power == 1);
  CHECK(delta.factors.empty());
  const GarsideForm inv = garside_form(W("B3: s1^-1"));
  CHECK(inv.delta_power == -1);
  REQUIRE(inv.factors.size() == 1);
  CHECK(words_equal(to_word(inv), W("B3: s1^-1")));
}

TEST_CASE("normal form is an invariant of the element") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const BraidWord a = support::random_word_upto(rng, 5, 10);
    const BraidWord g = support::random_word(rng, a.strands(), 6);
    CAPTURE(a.to_string());
    const BraidWord nf = normal_form(a);
    CHECK(normal_form(nf) == nf);
    CHECK(words_equal(nf, a));
    CHECK(words_equal(compose(compose(g, a), inverse(g)), conjugate(a, g)));
    CHECK(permutation_of(nf) == permutation_of(a));
    CHECK(exponent_sum(nf) == exponent_sum(a));
    CHECK(words_equal(compose(a, inverse(a)), BraidWord(a.strands())));
  }
}

TEST_CASE("far commutation and braid relation in B5") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 50; ++trial) {
    const BraidWord pre = support::random_word(rng, 5, 4);
    const BraidWord post = support::random_word(rng, 5, 4);
    auto wrap = [&](const char* mid) { return compose(compose(pre, W(mid)), post); };
    CHECK(words_equal(wrap("B5: s1 s3"), wrap("B5: s3 s1")));
    CHECK(words_equal(wrap("B5: s2 s4^-1"), wrap("B5: s4^-1 s2")));
    CHECK(words_equal(wrap("B5: s3 s4 s3"), wrap("B5: s4 s3 s4")));
    CHECK_FALSE(words_equal(wrap("B5: s3 s4"), wrap("B5: s4 s3")));
  }
}

TEST_CASE("B3 normal forms agree with rewrite search and Burau, words up to length 4") {
  const auto result = word_search::check_b3(4, 10, [](const BraidWord& w) { return normal_form(w).to_string(); });
  for (const auto& f : result.failures) MESSAGE(f);
  CHECK(result.words == 341);
  CHECK(result.failures.empty());
  CHECK(result.classes == result.burau_classes);
}
