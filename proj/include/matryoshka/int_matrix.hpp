#pragma once

// Dense matrices over GMP integers with fraction-free elimination.

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

#include "matryoshka/errors.hpp"
#include "matryoshka/polynomial.hpp"

namespace matryoshka {

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, 0) {}

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  mpz_class& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const mpz_class& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  bool is_zero() const {
    for (const auto& v : a_)
      if (v != 0) return false;
    return true;
  }

  bool is_symmetric() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i + 1; j < cols_; ++j)
        if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
  }

  bool is_antisymmetric() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i; j < cols_; ++j)
        if ((*this)(i, j) != -(*this)(j, i)) return false;
    return true;
  }

  mpz_class trace() const {
    mpz_class t = 0;
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
    return t;
  }

  IntMatrix transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend IntMatrix operator+(const IntMatrix& x, const IntMatrix& y) {
    check_same(x, y);
    IntMatrix out = x;
    for (std::size_t k = 0; k < out.a_.size(); ++k) out.a_[k] += y.a_[k];
    return out;
  }

  friend IntMatrix operator-(const IntMatrix& x, const IntMatrix& y) {
    check_same(x, y);
    IntMatrix out = x;
    for (std::size_t k = 0; k < out.a_.size(); ++k) out.a_[k] -= y.a_[k];
    return out;
  }

  friend IntMatrix operator*(const mpz_class& s, const IntMatrix& x) {
    IntMatrix out = x;
    for (auto& v : out.a_) v *= s;
    return out;
  }

  friend IntMatrix operator*(const IntMatrix& x, const IntMatrix& y) {
    if (x.cols_ != y.rows_) throw DimensionError("matrix product shape mismatch");
    IntMatrix out(x.rows_, y.cols_);
    mpz_class tmp;
    for (std::size_t i = 0; i < x.rows_; ++i)
      for (std::size_t k = 0; k < x.cols_; ++k) {
        const mpz_class& v = x(i, k);
        if (v == 0) continue;
        for (std::size_t j = 0; j < y.cols_; ++j) {
          mpz_mul(tmp.get_mpz_t(), v.get_mpz_t(), y(k, j).get_mpz_t());
          out(i, j) += tmp;
        }
      }
    return out;
  }

  friend bool operator==(const IntMatrix& x, const IntMatrix& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
  }

 private:
  static void check_same(const IntMatrix& x, const IntMatrix& y) {
    if (x.rows_ != y.rows_ || x.cols_ != y.cols_) throw DimensionError("matrix shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<mpz_class> a_;
};

/// Exact rank by Bareiss fraction-free elimination.
inline std::size_t rank(IntMatrix m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t r = 0;
  mpz_class prev = 1, t1, t2;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m(piv, c) == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(piv, j), m(r, j));
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        // m(i,j) = (m(r,c) m(i,j) - m(i,c) m(r,j)) / prev, exact.
        mpz_mul(t1.get_mpz_t(), m(r, c).get_mpz_t(), m(i, j).get_mpz_t());
        mpz_mul(t2.get_mpz_t(), m(i, c).get_mpz_t(), m(r, j).get_mpz_t());
        mpz_sub(t1.get_mpz_t(), t1.get_mpz_t(), t2.get_mpz_t());
        mpz_divexact(m(i, j).get_mpz_t(), t1.get_mpz_t(), prev.get_mpz_t());
      }
      m(i, c) = 0;
    }
    prev = m(r, c);
    ++r;
  }
  return r;
}

/// p(M) by Horner's rule.
inline IntMatrix evaluate(const IntPolynomial& p, const IntMatrix& M) {
  if (!M.is_square()) throw DimensionError("polynomial evaluation needs a square matrix");
  const std::size_t n = M.rows();
  IntMatrix acc(n, n);
  const auto& c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc = acc * M;
    for (std::size_t i = 0; i < n; ++i) acc(i, i) += *it;
  }
  return acc;
}

}  // namespace matryoshka
