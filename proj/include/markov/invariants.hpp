#pragma once

#include "markov/braid.hpp"
#include "markov/laurent.hpp"

namespace markov {

/// (n-1)x(n-1) reduced Burau image, multiplied out in letter order so that
/// burau_reduced(compose(a, b)) == burau_reduced(a) * burau_reduced(b).
/// sigma_1 in B2 maps to [-t]. Throws TooFewStrands for n < 2.
LaurentMatrix burau_reduced(const BraidWord& a);

/// Reduced Burau matrix of a single generator.
LaurentMatrix burau_generator(int strands, Generator g);

struct AlexanderPolynomial {
  /// det(I - burau) * (1 - t) / (1 - t^n), normalized up to units.
  LaurentPoly polynomial;
  /// det(I - burau), normalized up to units.
  LaurentPoly unscaled;
  /// Closure has more than one component.
  bool multi_component = false;
};

/// Alexander polynomial of the closed braid. The division by
/// (1 + t + ... + t^{n-1}) is exact for every closed braid; a remainder throws
/// NonExactDivision.
AlexanderPolynomial alexander_of_closure(const BraidWord& a);

/// exponent_sum(a) - strands. Throws NotAKnot for multi-component closures.
int self_linking(const BraidWord& a);

}  // namespace markov
