#include "markov/invariants.hpp"

#include "markov/error.hpp"

namespace markov {
namespace {

// The 3x3 core of sigma_i (rows/cols i-1, i, i+1 in 1-based terms),
// with its inverse; rows or columns that fall outside the matrix are dropped.
//   sigma_i      = [[1, t, 0], [0, -t, 0], [0, 1, 1]]
//   sigma_i^{-1} = [[1, 1, 0], [0, -t^-1, 0], [0, t^-1, 1]]
LaurentPoly core_entry(int sign, int r, int c) {
  const LaurentPoly t = LaurentPoly::t(1);
  const LaurentPoly t_inv = LaurentPoly::t(-1);
  if (r == c && r != 1) return LaurentPoly(1);
  if (sign > 0) {
    if (r == 0 && c == 1) return t;
    if (r == 1 && c == 1) return -t;
    if (r == 2 && c == 1) return LaurentPoly(1);
  } else {
    if (r == 0 && c == 1) return LaurentPoly(1);
    if (r == 1 && c == 1) return -t_inv;
    if (r == 2 && c == 1) return t_inv;
  }
  return {};
}

// Right-multiplies m by the generator matrix, touching only the affected columns.
void multiply_generator(LaurentMatrix& m, int strands, Generator g) {
  const int size = strands - 1;
  const int center = g.index - 1;  // 0-based row/col of the -t entry
  std::vector<LaurentPoly> column(static_cast<std::size_t>(3));
  for (std::size_t row = 0; row < m.rows(); ++row) {
    for (int dc = 0; dc < 3; ++dc) {
      const int col = center - 1 + dc;
      if (col < 0 || col >= size) continue;
      LaurentPoly acc;
      for (int dr = 0; dr < 3; ++dr) {
        const int k = center - 1 + dr;
        if (k < 0 || k >= size) continue;
        const LaurentPoly& lhs = m.at(row, static_cast<std::size_t>(k));
        if (lhs.is_zero()) continue;
        LaurentPoly entry = core_entry(g.sign, dr, dc);
        if (!entry.is_zero()) acc += lhs * entry;
      }
      column[static_cast<std::size_t>(dc)] = std::move(acc);
    }
    for (int dc = 0; dc < 3; ++dc) {
      const int col = center - 1 + dc;
      if (col < 0 || col >= size) continue;
      m.at(row, static_cast<std::size_t>(col)) = column[static_cast<std::size_t>(dc)];
    }
  }
}

}  // namespace

LaurentMatrix burau_generator(int strands, Generator g) {
  if (strands < 2) throw Error(ErrorCode::TooFewStrands, "reduced Burau needs at least 2 strands");
  LaurentMatrix m = LaurentMatrix::identity(static_cast<std::size_t>(strands - 1));
  multiply_generator(m, strands, g);
  return m;
}

LaurentMatrix burau_reduced(const BraidWord& a) {
  if (a.strands() < 2) {
    throw Error(ErrorCode::TooFewStrands, "reduced Burau needs at least 2 strands");
  }
  LaurentMatrix m = LaurentMatrix::identity(static_cast<std::size_t>(a.strands() - 1));
  for (const auto& g : a.letters()) multiply_generator(m, a.strands(), g);
  return m;
}

AlexanderPolynomial alexander_of_closure(const BraidWord& a) {
  AlexanderPolynomial result;
  result.multi_component = closure_component_count(a) > 1;
  if (a.strands() == 1) {
    result.polynomial = LaurentPoly(1);
    result.unscaled = LaurentPoly(1);
    return result;
  }
  const auto size = static_cast<std::size_t>(a.strands() - 1);
  LaurentPoly det = (LaurentMatrix::identity(size) - burau_reduced(a)).determinant();

  LaurentPoly numerator = det * (LaurentPoly(1) - LaurentPoly::t(1));
  LaurentPoly denominator = LaurentPoly(1) - LaurentPoly::t(a.strands());
  auto quotient = LaurentPoly::divide_exact(numerator, denominator);
  if (!quotient) {
    throw Error(ErrorCode::NonExactDivision,
                "det(I - Burau) not divisible by 1 + t + ... + t^" +
                    std::to_string(a.strands() - 1) + " for " + a.to_string());
  }
  result.polynomial = quotient->normalized();
  result.unscaled = det.normalized();
  return result;
}

int self_linking(const BraidWord& a) {
  if (closure_component_count(a) != 1) {
    throw Error(ErrorCode::NotAKnot, a.to_string() + " closes to a multi-component link");
  }
  return exponent_sum(a) - a.strands();
}

}  // namespace markov
