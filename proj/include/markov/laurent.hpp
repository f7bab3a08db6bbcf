#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace markov {

using Integer = boost::multiprecision::cpp_int;

/// Element of Z[t, t^-1]. Only nonzero coefficients are stored; the zero
/// polynomial is the empty map.
class LaurentPoly {
public:
  LaurentPoly() = default;
  LaurentPoly(Integer constant);  // NOLINT: implicit from integers is convenient
  LaurentPoly(long long constant) : LaurentPoly(Integer(constant)) {}
  LaurentPoly(int constant) : LaurentPoly(Integer(constant)) {}

  static LaurentPoly monomial(Integer coefficient, int exponent);
  static LaurentPoly t(int exponent = 1) { return monomial(1, exponent); }

  bool is_zero() const noexcept { return terms_.empty(); }
  const std::map<int, Integer>& terms() const noexcept { return terms_; }
  Integer coefficient(int exponent) const;
  int min_exponent() const;  // requires nonzero
  int max_exponent() const;  // requires nonzero

  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const LaurentPoly& other);
  LaurentPoly operator-() const;

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  /// Exact quotient a / b in Z[t, t^-1], or nullopt when b does not divide a.
  static std::optional<LaurentPoly> divide_exact(const LaurentPoly& a, const LaurentPoly& b);

  /// Canonical representative up to units +-t^k: lowest exponent 0 and a
  /// positive coefficient on the highest power.
  LaurentPoly normalized() const;

  /// Terms in increasing exponent, e.g. "1 - 3t + t^2", "-t^-1 + 2"; zero is "0".
  std::string to_string() const;

private:
  void add_term(int exponent, const Integer& coefficient);

  std::map<int, Integer> terms_;
};

class LaurentMatrix {
public:
  LaurentMatrix(std::size_t rows, std::size_t cols);
  static LaurentMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  LaurentPoly& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const LaurentPoly& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  friend LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b);
  friend LaurentMatrix operator-(const LaurentMatrix& a, const LaurentMatrix& b);
  friend bool operator==(const LaurentMatrix&, const LaurentMatrix&) = default;

  /// Fraction-free (Bareiss) elimination with exact Laurent division.
  LaurentPoly determinant() const;

private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<LaurentPoly> entries_;
};

}  // namespace markov
