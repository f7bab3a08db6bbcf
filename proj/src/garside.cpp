// Left-greedy normal form over permutation braids.
//
// Internally a simple braid is kept as `ends`: ends[s] is the final position
// of the strand starting at position s. Two strands of a permutation braid
// cross (once, positively) exactly when their order is reversed.

#include <algorithm>
#include <numeric>

#include "markov/braid.hpp"

namespace markov {
namespace {

using Ends = std::vector<int>;

Ends identity_ends(int n) {
  Ends e(static_cast<std::size_t>(n));
  std::iota(e.begin(), e.end(), 0);
  return e;
}

Ends delta_ends(int n) {
  Ends e(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) e[static_cast<std::size_t>(j)] = n - 1 - j;
  return e;
}

Ends invert(const Ends& e) {
  Ends inv(e.size());
  for (std::size_t s = 0; s < e.size(); ++s) inv[static_cast<std::size_t>(e[s])] = static_cast<int>(s);
  return inv;
}

// i (0-based) is in the starting set when the simple braid can be written
// sigma_{i+1} * B'.
bool starts_with(const Ends& e, std::size_t i) { return e[i] > e[i + 1]; }

// Swap the strands finishing at positions i, i+1: right-multiply by sigma.
void append_sigma(Ends& e, std::size_t i) {
  for (auto& v : e) {
    if (v == static_cast<int>(i)) {
      v = static_cast<int>(i + 1);
    } else if (v == static_cast<int>(i + 1)) {
      v = static_cast<int>(i);
    }
  }
}

// Remove a leading sigma: B = sigma * B'.
void strip_leading_sigma(Ends& e, std::size_t i) { std::swap(e[i], e[i + 1]); }

// Conjugation by Delta: sigma_i <-> sigma_{n-i}.
Ends flip(const Ends& e) {
  const int n = static_cast<int>(e.size());
  Ends out(e.size());
  for (int j = 0; j < n; ++j) {
    out[static_cast<std::size_t>(j)] = n - 1 - e[static_cast<std::size_t>(n - 1 - j)];
  }
  return out;
}

// Makes (a, b) left weighted; returns whether anything moved.
bool left_weight(Ends& a, Ends& b) {
  bool changed = false;
  Ends a_inv = invert(a);
  for (bool progress = true; progress;) {
    progress = false;
    for (std::size_t i = 0; i + 1 < b.size(); ++i) {
      // a * sigma_i stays simple iff the strands ending at i, i+1 have not crossed in a.
      if (starts_with(b, i) && a_inv[i] < a_inv[i + 1]) {
        append_sigma(a, i);
        std::swap(a_inv[i], a_inv[i + 1]);
        strip_leading_sigma(b, i);
        progress = changed = true;
      }
    }
  }
  return changed;
}

struct Builder {
  int n;
  int delta_power = 0;
  std::vector<Ends> factors;

  void push(Ends factor) {
    factors.push_back(std::move(factor));
    for (bool changed = true; changed;) {
      changed = false;
      for (std::size_t j = factors.size(); j-- > 1;) {
        changed |= left_weight(factors[j - 1], factors[j]);
      }
    }
    const Ends delta = delta_ends(n);
    const Ends id = identity_ends(n);
    std::size_t lead = 0;
    while (lead < factors.size() && factors[lead] == delta) ++lead;
    delta_power += static_cast<int>(lead);
    factors.erase(factors.begin(), factors.begin() + static_cast<std::ptrdiff_t>(lead));
    while (!factors.empty() && factors.back() == id) factors.pop_back();
  }
};

std::vector<Generator> expand_simple(Ends e) {
  std::vector<Generator> letters;
  for (bool found = true; found;) {
    found = false;
    for (std::size_t i = 0; i + 1 < e.size(); ++i) {
      if (starts_with(e, i)) {
        letters.push_back({static_cast<int>(i) + 1, 1});
        strip_leading_sigma(e, i);
        found = true;
        break;
      }
    }
  }
  return letters;
}

Ends ends_of(const Permutation& p) { return invert(p.images()); }

}  // namespace

GarsideForm garside_form(const BraidWord& a) {
  const int n = a.strands();
  Builder builder{n, 0, {}};
  if (n >= 2) {
    for (const auto& g : a.letters()) {
      const auto i = static_cast<std::size_t>(g.index - 1);
      if (g.sign > 0) {
        Ends sigma = identity_ends(n);
        append_sigma(sigma, i);
        builder.push(std::move(sigma));
      } else {
        // X sigma_i^-1 = Delta^-1 tau(X) (Delta sigma_i^-1)
        --builder.delta_power;
        for (auto& f : builder.factors) f = flip(f);
        Ends tail = delta_ends(n);
        for (auto& v : tail) {
          if (v == static_cast<int>(i)) {
            v = static_cast<int>(i + 1);
          } else if (v == static_cast<int>(i + 1)) {
            v = static_cast<int>(i);
          }
        }
        builder.push(std::move(tail));
      }
    }
  }
  GarsideForm form{n, builder.delta_power, {}};
  for (const auto& f : builder.factors) form.factors.emplace_back(invert(f));
  return form;
}

BraidWord to_word(const GarsideForm& form) {
  const int n = form.strands;
  std::vector<Generator> letters;
  if (n >= 2) {
    const std::vector<Generator> delta = expand_simple(delta_ends(n));
    std::vector<Generator> delta_inv;
    for (auto it = delta.rbegin(); it != delta.rend(); ++it) delta_inv.push_back(it->inverse());
    for (int k = 0; k < std::abs(form.delta_power); ++k) {
      const auto& block = form.delta_power > 0 ? delta : delta_inv;
      letters.insert(letters.end(), block.begin(), block.end());
    }
    for (const auto& f : form.factors) {
      auto block = expand_simple(ends_of(f));
      letters.insert(letters.end(), block.begin(), block.end());
    }
  }
  return BraidWord(n, std::move(letters));
}

}  // namespace markov
