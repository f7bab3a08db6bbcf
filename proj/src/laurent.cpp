#include "markov/laurent.hpp"

#include <sstream>
#include <utility>

#include "markov/error.hpp"

namespace markov {

LaurentPoly::LaurentPoly(Integer constant) { add_term(0, constant); }

LaurentPoly LaurentPoly::monomial(Integer coefficient, int exponent) {
  LaurentPoly p;
  p.add_term(exponent, coefficient);
  return p;
}

void LaurentPoly::add_term(int exponent, const Integer& coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

Integer LaurentPoly::coefficient(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Integer(0) : it->second;
}

int LaurentPoly::min_exponent() const {
  if (terms_.empty()) throw Error(ErrorCode::InvalidArgument, "zero polynomial has no exponents");
  return terms_.begin()->first;
}

int LaurentPoly::max_exponent() const {
  if (terms_.empty()) throw Error(ErrorCode::InvalidArgument, "zero polynomial has no exponents");
  return terms_.rbegin()->first;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) {
  *this = *this * other;
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
  }
  return out;
}

std::optional<LaurentPoly> LaurentPoly::divide_exact(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) return std::nullopt;
  if (a.is_zero()) return LaurentPoly{};
  const int b_min = b.min_exponent();
  const int b_max = b.max_exponent();
  const Integer& b_low = b.terms_.begin()->second;
  const int last_exponent = a.max_exponent() - b_max;

  LaurentPoly quotient;
  LaurentPoly rest = a;
  while (!rest.is_zero()) {
    const int e = rest.min_exponent() - b_min;
    if (e > last_exponent) return std::nullopt;
    const Integer& low = rest.terms_.begin()->second;
    if (low % b_low != 0) return std::nullopt;
    LaurentPoly step = monomial(low / b_low, e);
    quotient += step;
    rest -= step * b;
  }
  return quotient;
}

LaurentPoly LaurentPoly::normalized() const {
  if (is_zero()) return {};
  const int shift = min_exponent();
  const bool negate = terms_.rbegin()->second < 0;
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e - shift, negate ? Integer(-c) : c);
  return out;
}

std::string LaurentPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Integer magnitude = c < 0 ? Integer(-c) : c;
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      out << magnitude;
      continue;
    }
    if (magnitude != 1) out << magnitude;
    out << 't';
    if (e != 1) out << '^' << e;
  }
  return out.str();
}

LaurentMatrix::LaurentMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

LaurentMatrix LaurentMatrix::identity(std::size_t n) {
  LaurentMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = LaurentPoly(1);
  return m;
}

LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorCode::InvalidArgument, "matrix shapes do not chain");
  LaurentMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const LaurentPoly& lhs = a.at(i, k);
      if (lhs.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (!b.at(k, j).is_zero()) out.at(i, j) += lhs * b.at(k, j);
      }
    }
  }
  return out;
}

LaurentMatrix operator-(const LaurentMatrix& a, const LaurentMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
    throw Error(ErrorCode::InvalidArgument, "matrix shapes differ");
  }
  LaurentMatrix out = a;
  for (std::size_t i = 0; i < out.entries_.size(); ++i) out.entries_[i] -= b.entries_[i];
  return out;
}

LaurentPoly LaurentMatrix::determinant() const {
  if (rows_ != cols_) throw Error(ErrorCode::InvalidArgument, "determinant of a non-square matrix");
  const std::size_t n = rows_;
  if (n == 0) return LaurentPoly(1);
  LaurentMatrix m = *this;
  LaurentPoly previous(1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m.at(k, k).is_zero()) {
      std::size_t pivot = k + 1;
      while (pivot < n && m.at(pivot, k).is_zero()) ++pivot;
      if (pivot == n) return {};
      for (std::size_t c = 0; c < n; ++c) std::swap(m.at(k, c), m.at(pivot, c));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        LaurentPoly numerator = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
        auto quotient = LaurentPoly::divide_exact(numerator, previous);
        if (!quotient) throw Error(ErrorCode::NonExactDivision, "Bareiss step did not divide");
        m.at(i, j) = std::move(*quotient);
      }
      m.at(i, k) = LaurentPoly{};
    }
    previous = m.at(k, k);
  }
  LaurentPoly det = m.at(n - 1, n - 1);
  return negate ? -det : det;
}

}  // namespace markov
