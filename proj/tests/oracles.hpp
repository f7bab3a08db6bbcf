#pragma once

// Reference computations that share no code with the library: a small
// long-long Laurent polynomial, Seifert-matrix and Fox-calculus Alexander
// polynomials, and the unreduced Burau matrix used to separate B3 elements.

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "markov/braid.hpp"
#include "markov/laurent.hpp"

namespace oracle {

struct Poly {
  std::map<int, long long> c;

  static Poly mono(long long k, int e) {
    Poly p;
    if (k != 0) p.c[e] = k;
    return p;
  }
  void add(int e, long long k) {
    if ((c[e] += k) == 0) c.erase(e);
  }
  Poly operator+(const Poly& o) const {
    Poly r = *this;
    for (auto [e, k] : o.c) r.add(e, k);
    return r;
  }
  Poly operator-(const Poly& o) const {
    Poly r = *this;
    for (auto [e, k] : o.c) r.add(e, -k);
    return r;
  }
  Poly operator*(const Poly& o) const {
    Poly r;
    for (auto [e1, k1] : c) {
      for (auto [e2, k2] : o.c) r.add(e1 + e2, k1 * k2);
    }
    return r;
  }
  bool operator==(const Poly& o) const { return c == o.c; }
  bool operator<(const Poly& o) const { return c < o.c; }

  /// Shift to lowest exponent 0, highest coefficient positive.
  Poly normalized() const {
    if (c.empty()) return {};
    Poly r;
    const int shift = c.begin()->first;
    const long long s = c.rbegin()->second < 0 ? -1 : 1;
    for (auto [e, k] : c) r.c[e - shift] = s * k;
    return r;
  }
};

inline Poly t(int e = 1) { return Poly::mono(1, e); }
inline Poly constant(long long k) { return Poly::mono(k, 0); }

/// Same polynomial, coefficient by coefficient.
inline bool same(const Poly& p, const markov::LaurentPoly& q) {
  if (p.c.size() != q.terms().size()) return false;
  for (auto [e, k] : p.c) {
    if (q.coefficient(e) != markov::Integer(k)) return false;
  }
  return true;
}

using Matrix = std::vector<std::vector<Poly>>;

/// Laplace expansion along the first row; fine for the tiny sizes used here.
inline Poly det(const Matrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return constant(1);
  if (n == 1) return m[0][0];
  Poly total;
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j].c.empty()) continue;
    Matrix minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Poly> row;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != j) row.push_back(m[r][k]);
      }
      minor.push_back(row);
    }
    Poly term = m[0][j] * det(minor);
    total = (j % 2 == 0) ? total + term : total - term;
  }
  return total;
}

/// det(V - t V^T) for an integer Seifert matrix.
inline Poly seifert_alexander(const std::vector<std::vector<long long>>& v) {
  const std::size_t n = v.size();
  Matrix m(n, std::vector<Poly>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = constant(v[i][j]) - Poly::mono(v[j][i], 1);
  }
  return det(m).normalized();
}

// Free-group words: letter +k is x_k, -k its inverse (k >= 1).
using FreeWord = std::vector<int>;

inline void push_reduced(FreeWord& w, int letter) {
  if (!w.empty() && w.back() == -letter) {
    w.pop_back();
  } else {
    w.push_back(letter);
  }
}

inline FreeWord invert(const FreeWord& w) {
  FreeWord r;
  for (auto it = w.rbegin(); it != w.rend(); ++it) r.push_back(-*it);
  return r;
}

/// Alexander polynomial of the closed braid from the Artin action on the
/// free group: Fox-differentiate the relations x_j^beta x_j^-1, abelianize
/// every generator to t, and take the minor deleting the last row and column.
inline Poly fox_alexander(const markov::BraidWord& b) {
  const int n = b.strands();
  if (n == 1) return constant(1);
  std::vector<FreeWord> image(static_cast<std::size_t>(n) + 1);
  for (int k = 1; k <= n; ++k) image[static_cast<std::size_t>(k)] = {k};
  for (const auto& g : b.letters()) {
    const int i = g.index;
    std::vector<FreeWord> sub(static_cast<std::size_t>(n) + 1);
    for (int k = 1; k <= n; ++k) sub[static_cast<std::size_t>(k)] = {k};
    if (g.sign > 0) {
      sub[static_cast<std::size_t>(i)] = {i, i + 1, -i};
      sub[static_cast<std::size_t>(i + 1)] = {i};
    } else {
      sub[static_cast<std::size_t>(i)] = {i + 1};
      sub[static_cast<std::size_t>(i + 1)] = {-(i + 1), i, i + 1};
    }
    for (int k = 1; k <= n; ++k) {
      FreeWord next;
      for (int letter : image[static_cast<std::size_t>(k)]) {
        const FreeWord& piece = sub[static_cast<std::size_t>(std::abs(letter))];
        for (int x : letter > 0 ? piece : invert(piece)) push_reduced(next, x);
      }
      image[static_cast<std::size_t>(k)] = std::move(next);
    }
  }
  Matrix fox(static_cast<std::size_t>(n - 1), std::vector<Poly>(static_cast<std::size_t>(n - 1)));
  for (int j = 1; j < n; ++j) {
    FreeWord rel = image[static_cast<std::size_t>(j)];
    rel.push_back(-j);
    int exponent = 0;  // exponent sum of the prefix read so far
    for (int letter : rel) {
      const int k = std::abs(letter);
      if (letter > 0) {
        if (k < n) fox[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(k - 1)].add(exponent, 1);
        ++exponent;
      } else {
        --exponent;
        if (k < n) fox[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(k - 1)].add(exponent, -1);
      }
    }
  }
  return det(fox).normalized();
}

/// Unreduced Burau image; faithful on B3, so it decides equality there.
inline Matrix burau_unreduced(const markov::BraidWord& b) {
  const std::size_t n = static_cast<std::size_t>(b.strands());
  Matrix m(n, std::vector<Poly>(n));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = constant(1);
  for (const auto& g : b.letters()) {
    const std::size_t i = static_cast<std::size_t>(g.index - 1);
    Poly a, bb, c, d;  // block [[a, bb], [c, d]] on rows/cols i, i+1
    if (g.sign > 0) {
      a = constant(1) - t(1), bb = t(1), c = constant(1), d = Poly{};
    } else {
      a = Poly{}, bb = constant(1), c = t(-1), d = constant(1) - t(-1);
    }
    for (std::size_t r = 0; r < n; ++r) {
      const Poly x = m[r][i], y = m[r][i + 1];
      m[r][i] = x * a + y * c;
      m[r][i + 1] = x * bb + y * d;
    }
  }
  return m;
}

}  // namespace oracle
