#pragma once

// Exact arithmetic in quadratic extensions K(sqrt r) and small dense matrices
// over them.

#include <gmpxx.h>

#include <string>
#include <vector>

#include "matryoshka/errors.hpp"

namespace matryoshka {

/// a + b sqrt(Tag::radicand()), with the radicand an element of K.
template <class K, class Tag>
struct QuadraticExtension {
  K a{};
  K b{};

  QuadraticExtension() = default;
  QuadraticExtension(K re, K rad = K{}) : a(std::move(re)), b(std::move(rad)) {}
  QuadraticExtension(long v) : a(K(v)), b(K(0)) {}

  static QuadraticExtension root() { return {K(0), K(1)}; }

  bool is_zero() const { return a == K(0) && b == K(0); }

  QuadraticExtension conj() const { return {a, -b}; }

  friend QuadraticExtension operator+(const QuadraticExtension& x, const QuadraticExtension& y) {
    return {x.a + y.a, x.b + y.b};
  }
  friend QuadraticExtension operator-(const QuadraticExtension& x, const QuadraticExtension& y) {
    return {x.a - y.a, x.b - y.b};
  }
  friend QuadraticExtension operator-(const QuadraticExtension& x) { return {-x.a, -x.b}; }
  friend QuadraticExtension operator*(const QuadraticExtension& x, const QuadraticExtension& y) {
    return {x.a * y.a + Tag::radicand() * x.b * y.b, x.a * y.b + x.b * y.a};
  }
  QuadraticExtension& operator+=(const QuadraticExtension& y) { return *this = *this + y; }

  /// Norm down to K.
  K norm() const { return a * a - Tag::radicand() * b * b; }

  QuadraticExtension inverse() const {
    const K n = norm();
    if (n == K(0)) throw Error("division by zero in quadratic extension");
    return {a / n, -b / n};
  }
  friend QuadraticExtension operator/(const QuadraticExtension& x, const QuadraticExtension& y) { return x * y.inverse(); }

  friend bool operator==(const QuadraticExtension& x, const QuadraticExtension& y) { return x.a == y.a && x.b == y.b; }

  std::string to_string() const;
};

namespace detail {
inline std::string field_string(const mpq_class& q) { return q.get_str(); }
template <class K, class Tag>
std::string field_string(const QuadraticExtension<K, Tag>& x) { return x.to_string(); }
}  // namespace detail

template <class K, class Tag>
std::string QuadraticExtension<K, Tag>::to_string() const {
  return "(" + detail::field_string(a) + " + " + detail::field_string(b) + "*" + Tag::symbol() + ")";
}

struct Sqrt3Tag {
  static mpq_class radicand() { return 3; }
  static const char* symbol() { return "sqrt3"; }
};
using Q3 = QuadraticExtension<mpq_class, Sqrt3Tag>;

struct ImaginaryUnitTag {
  static Q3 radicand() { return Q3(-1); }
  static const char* symbol() { return "i"; }
};
/// Q(sqrt 3, i).
using Q3i = QuadraticExtension<Q3, ImaginaryUnitTag>;

template <class F>
class FieldMatrix {
 public:
  FieldMatrix(std::size_t n, std::size_t m) : n_(n), m_(m), a_(n * m, F(0)) {}

  std::size_t rows() const { return n_; }
  std::size_t cols() const { return m_; }
  F& operator()(std::size_t i, std::size_t j) { return a_[i * m_ + j]; }
  const F& operator()(std::size_t i, std::size_t j) const { return a_[i * m_ + j]; }

  friend FieldMatrix operator*(const FieldMatrix& x, const FieldMatrix& y) {
    if (x.m_ != y.n_) throw DimensionError("matrix product shape mismatch");
    FieldMatrix out(x.n_, y.m_);
    for (std::size_t i = 0; i < x.n_; ++i)
      for (std::size_t k = 0; k < x.m_; ++k)
        if (!(x(i, k) == F(0)))
          for (std::size_t j = 0; j < y.m_; ++j) out(i, j) += x(i, k) * y(k, j);
    return out;
  }
  friend FieldMatrix operator-(const FieldMatrix& x, const FieldMatrix& y) {
    FieldMatrix out = x;
    for (std::size_t k = 0; k < out.a_.size(); ++k) out.a_[k] = out.a_[k] - y.a_[k];
    return out;
  }
  friend bool operator==(const FieldMatrix& x, const FieldMatrix& y) { return x.n_ == y.n_ && x.m_ == y.m_ && x.a_ == y.a_; }

  std::vector<F> apply(const std::vector<F>& v) const {
    if (v.size() != m_) throw DimensionError("vector length mismatch");
    std::vector<F> out(n_, F(0));
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < m_; ++j) out[i] += (*this)(i, j) * v[j];
    return out;
  }

  /// Entrywise embedding into a larger field.
  template <class G>
  FieldMatrix<G> lift() const {
    FieldMatrix<G> out(n_, m_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < m_; ++j) out(i, j) = G((*this)(i, j));
    return out;
  }

 private:
  std::size_t n_, m_;
  std::vector<F> a_;
};

}  // namespace matryoshka
