#pragma once

// Braid words in the Artin generators of B_n and the Markov moves on them.
//
// Conventions:
//   * sigma_i (sign +1) is the positive half-twist exchanging strands at
//     positions i and i+1; sign -1 is its inverse.
//   * Words are read left to right: in compose(a, b) the strands pass
//     through a first, then b.

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace markov {

struct Generator {
  int index = 1;  // 1 <= index <= strands - 1
  int sign = 1;   // +1 or -1

  Generator inverse() const { return {index, -sign}; }
  friend bool operator==(const Generator&, const Generator&) = default;
  friend auto operator<=>(const Generator&, const Generator&) = default;
};

class BraidWord {
public:
  explicit BraidWord(int strands = 1, std::vector<Generator> letters = {});

  int strands() const noexcept { return strands_; }
  const std::vector<Generator>& letters() const noexcept { return letters_; }
  std::size_t length() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  /// Parses `B<n>: s<i> s<j>^-1 ...`. Throws Error(ParseError) with the
  /// offending column on malformed text or out-of-range indices.
  static BraidWord parse(std::string_view text);
  std::string to_string() const;

  friend bool operator==(const BraidWord&, const BraidWord&) = default;

private:
  int strands_;
  std::vector<Generator> letters_;
};

/// Strand permutation of a braid. `images[j]` (0-based) is the starting
/// position of the strand that ends at position j, so the word s1 s2 in B3
/// maps 1->2->3->1.
class Permutation {
public:
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int n);

  int size() const noexcept { return static_cast<int>(images_.size()); }
  int operator[](int j) const { return images_[static_cast<std::size_t>(j)]; }
  const std::vector<int>& images() const noexcept { return images_; }

  int cycle_count() const;

  /// Function composition: (p * q)[j] == p[q[j]]. With the convention above,
  /// permutation_of(compose(a, b)) == permutation_of(a) * permutation_of(b).
  friend Permutation operator*(const Permutation& p, const Permutation& q);
  friend bool operator==(const Permutation&, const Permutation&) = default;

private:
  std::vector<int> images_;
};

BraidWord compose(const BraidWord& a, const BraidWord& b);
BraidWord inverse(const BraidWord& a);
BraidWord free_reduce(const BraidWord& a);

Permutation permutation_of(const BraidWord& a);
int closure_component_count(const BraidWord& a);
int exponent_sum(const BraidWord& a);

/// g * a * g^-1, freely reduced.
BraidWord conjugate(const BraidWord& a, const BraidWord& g);

/// Moves the first letter to the end (a conjugation by that letter).
BraidWord cyclic_rotate(const BraidWord& a);

/// Appends sigma_n^{sign} and adds one strand.
BraidWord stabilize(const BraidWord& a, int sign);

/// Inverse of stabilize: sigma_{n-1} must occur exactly once and be the final
/// letter. Throws NotDestabilizable otherwise.
BraidWord destabilize(const BraidWord& a);

/// Rotates the word cyclically so that the unique sigma_{n-1}^{+-1} is last.
/// Returns the number of single-letter rotations used. Throws
/// NotDestabilizable if sigma_{n-1} does not occur exactly once.
int rotate_to_destabilizable(BraidWord& a);

/// Braid connected sum: w is shifted up by v.strands - 1 and appended to v.
BraidWord connect_sum(const BraidWord& v, const BraidWord& w);

/// Left-greedy Garside normal form, re-expanded into letters.
BraidWord normal_form(const BraidWord& a);

/// Equality in B_n. Throws StrandMismatch when strand counts differ.
bool words_equal(const BraidWord& a, const BraidWord& b);

/// Delta^k A_1 ... A_m with each A_i a permutation braid, left weighted.
/// Factors are stored as Permutations in the same convention as
/// permutation_of.
struct GarsideForm {
  int strands = 1;
  int delta_power = 0;
  std::vector<Permutation> factors;

  friend bool operator==(const GarsideForm&, const GarsideForm&) = default;
};

GarsideForm garside_form(const BraidWord& a);
BraidWord to_word(const GarsideForm& form);

}  // namespace markov
