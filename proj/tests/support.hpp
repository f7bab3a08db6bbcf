#pragma once

#include <random>

#include "markov/braid.hpp"
#include "markov/certify.hpp"
#include "markov/error.hpp"
#include "markov/foliation.hpp"
#include "markov/unlink.hpp"

namespace support {

using markov::BraidWord;
using markov::Generator;

inline BraidWord random_word(std::mt19937_64& rng, int strands, int length) {
  std::vector<Generator> letters;
  if (strands >= 2) {
    std::uniform_int_distribution<int> index(1, strands - 1);
    std::uniform_int_distribution<int> coin(0, 1);
    for (int i = 0; i < length; ++i) letters.push_back({index(rng), coin(rng) ? 1 : -1});
  }
  return BraidWord(strands, std::move(letters));
}

/// Strands in [1, max_strands], length in [0, max_length].
inline BraidWord random_word_upto(std::mt19937_64& rng, int max_strands, int max_length) {
  const int n = std::uniform_int_distribution<int>(1, max_strands)(rng);
  const int len = std::uniform_int_distribution<int>(0, max_length)(rng);
  return random_word(rng, n, len);
}

/// Rejection-samples a word whose closure is a knot.
inline BraidWord random_knot_word(std::mt19937_64& rng, int max_strands, int max_length) {
  for (;;) {
    BraidWord w = random_word_upto(rng, max_strands, max_length);
    if (markov::closure_component_count(w) == 1) return w;
  }
}

inline markov::ColoredDiagram random_diagram(std::mt19937_64& rng, int max_crossings) {
  markov::ColoredDiagram d;
  const int n = std::uniform_int_distribution<int>(0, max_crossings)(rng);
  std::uniform_int_distribution<int> coin(0, 1);
  for (int i = 0; i < n; ++i) {
    d.crossings.push_back({3 * i + 1, coin(rng) ? markov::Color::red : markov::Color::green,
                           coin(rng) ? markov::Color::red : markov::Color::green});
  }
  return d;
}

/// The radial disc up to renaming its one vertex.
inline bool is_radial(const markov::Tiling& t) {
  markov::Tiling renamed = t;
  if (renamed.vertices.size() == 1) renamed.vertices[0].id = 0;
  return renamed == markov::radial_disc();
}

/// Two positive vertices and one self-glued aa tile.
inline markov::Tiling two_vertex_disc(int sign = 1) {
  return markov::insert_end_tile(markov::radial_disc(), {std::nullopt, sign, 1, 0});
}

/// The {ab, aa} disc: an end tile plus an ab tile whose negative vertex has
/// valence one. Ledger index 1.
inline markov::Tiling ab_aa_disc(int end_sign = 1, int ab_sign = -1) {
  const markov::Tiling two = two_vertex_disc(end_sign);
  const auto& tile = two.tiles.front();
  return markov::insert_ab_tile(two, {tile.id, 0, 0, ab_sign, 2, 1});
}

/// A random certificate that applies to `start`; destabilizations are
/// preceded by the rotations that expose sigma_{n-1}.
inline markov::MoveCertificate random_certificate(std::mt19937_64& rng, const BraidWord& start, int length) {
  markov::MoveCertificate c{start.strands(), {}};
  BraidWord w = start;
  for (int i = 0; i < length; ++i) {
    markov::Move m;
    switch (rng() % 4) {
      case 0: m = markov::Move::stabilization(rng() % 2 ? 1 : -1); break;
      case 1: {
        BraidWord probe = w;
        try {
          const int turns = markov::rotate_to_destabilizable(probe);
          for (int k = 0; k < turns; ++k) c.moves.push_back(markov::Move::rotation());
          w = probe;
          m = markov::Move::destabilization(w.letters().back().sign);
        } catch (const markov::Error&) {
          m = markov::Move::stabilization(1);
        }
        break;
      }
      case 2: m = markov::Move::conjugation(random_word(rng, w.strands(), 3)); break;
      default: m = markov::Move::rotation(); break;
    }
    w = markov::apply_move(w, m);
    c.moves.push_back(m);
  }
  return c;
}

}  // namespace support
