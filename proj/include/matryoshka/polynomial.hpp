#pragma once

// Dense univariate polynomials with GMP integer coefficients.

#include <gmpxx.h>

#include <cctype>
#include <string>
#include <utility>
#include <vector>

#include "matryoshka/errors.hpp"

namespace matryoshka {

class IntPolynomial {
 public:
  IntPolynomial() = default;
  /// Coefficients in ascending degree.
  explicit IntPolynomial(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }
  IntPolynomial(std::initializer_list<long> coeffs) {
    for (long v : coeffs) c_.emplace_back(v);
    trim();
  }

  static IntPolynomial constant(const mpz_class& v) { return IntPolynomial(std::vector<mpz_class>{v}); }
  static IntPolynomial x() { return IntPolynomial({0, 1}); }
  /// x - r.
  static IntPolynomial linear(const mpz_class& r) { return IntPolynomial(std::vector<mpz_class>{-r, 1}); }

  /// Degree; -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  const std::vector<mpz_class>& coefficients() const noexcept { return c_; }
  mpz_class coefficient(int k) const { return k >= 0 && k < static_cast<int>(c_.size()) ? c_[k] : mpz_class(0); }
  mpz_class leading() const { return c_.empty() ? mpz_class(0) : c_.back(); }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }

  mpz_class evaluate(const mpz_class& v) const {
    mpz_class acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * v + *it;
    return acc;
  }

  /// p(-x).
  IntPolynomial reflect() const {
    auto c = c_;
    for (std::size_t k = 1; k < c.size(); k += 2) c[k] = -c[k];
    return IntPolynomial(std::move(c));
  }

  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<mpz_class> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.coefficient(static_cast<int>(k)) + b.coefficient(static_cast<int>(k));
    return IntPolynomial(std::move(c));
  }
  friend IntPolynomial operator-(const IntPolynomial& a) {
    auto c = a.c_;
    for (auto& v : c) v = -v;
    return IntPolynomial(std::move(c));
  }
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) { return a + (-b); }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<mpz_class> c(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return IntPolynomial(std::move(c));
  }
  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) { return a.c_ == b.c_; }

  IntPolynomial pow(int e) const {
    IntPolynomial result = constant(1), base = *this;
    for (; e > 0; e >>= 1) {
      if (e & 1) result = result * base;
      if (e > 1) base = base * base;
    }
    return result;
  }

  /// Quotient and remainder by a monic divisor.
  std::pair<IntPolynomial, IntPolynomial> divmod(const IntPolynomial& d) const {
    if (!d.is_monic()) throw FactorError("division requires a monic divisor");
    if (degree() < d.degree()) return {IntPolynomial(), *this};
    std::vector<mpz_class> rem = c_;
    std::vector<mpz_class> q(c_.size() - d.c_.size() + 1, 0);
    for (int k = degree() - d.degree(); k >= 0; --k) {
      const mpz_class lead = rem[k + d.degree()];
      q[k] = lead;
      if (lead == 0) continue;
      for (int j = 0; j <= d.degree(); ++j) rem[k + j] -= lead * d.c_[j];
    }
    return {IntPolynomial(std::move(q)), IntPolynomial(std::move(rem))};
  }

  bool divisible_by(const IntPolynomial& d) const { return divmod(d).second.is_zero(); }

  /// Text such as "x^6+51x^4+699x^2+1369".
  std::string to_string(const std::string& var = "x") const {
    if (c_.empty()) return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
      const mpz_class& v = c_[k];
      if (v == 0) continue;
      const mpz_class mag = abs(v);
      out += v < 0 ? "-" : (out.empty() ? "" : "+");
      if (k == 0 || mag != 1) out += mag.get_str();
      if (k >= 1) out += var;
      if (k >= 2) out += "^" + std::to_string(k);
    }
    return out;
  }

  /// Parses the output of to_string (any variable letter, optional spaces and
  /// '*' between coefficient and variable).
  static IntPolynomial parse(const std::string& text) {
    std::string s;
    for (char ch : text)
      if (!std::isspace(static_cast<unsigned char>(ch)) && ch != '*') s += ch;
    if (s.empty()) throw ParseError("empty polynomial", 0);
    std::vector<mpz_class> c;
    std::size_t pos = 0;
    while (pos < s.size()) {
      int sign = 1;
      if (s[pos] == '+' || s[pos] == '-') {
        sign = s[pos] == '-' ? -1 : 1;
        ++pos;
      } else if (pos != 0) {
        throw ParseError("expected '+' or '-' in '" + text + "'", 0);
      }
      std::size_t start = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      mpz_class coeff = start == pos ? mpz_class(1) : mpz_class(s.substr(start, pos - start));
      int exponent = 0;
      if (pos < s.size() && std::isalpha(static_cast<unsigned char>(s[pos]))) {
        ++pos;
        exponent = 1;
        if (pos < s.size() && s[pos] == '^') {
          ++pos;
          std::size_t e0 = pos;
          while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
          if (e0 == pos) throw ParseError("missing exponent in '" + text + "'", 0);
          exponent = std::stoi(s.substr(e0, pos - e0));
        }
      } else if (start == pos) {
        throw ParseError("malformed term in '" + text + "'", 0);
      }
      if (static_cast<int>(c.size()) <= exponent) c.resize(exponent + 1, 0);
      c[exponent] += sign * coeff;
    }
    return IntPolynomial(std::move(c));
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<mpz_class> c_;
};

/// A claimed factorization: irreducible factors with multiplicities.
struct Factor {
  IntPolynomial poly;
  int multiplicity = 1;
};
using Factorization = std::vector<Factor>;

inline IntPolynomial expand(const Factorization& f) {
  IntPolynomial p = IntPolynomial::constant(1);
  for (const auto& [q, m] : f) p = p * q.pow(m);
  return p;
}

/// True iff the product of the factor powers equals p coefficientwise.
inline bool verify_factorization(const IntPolynomial& p, const Factorization& f) { return expand(f) == p; }

/// "(x+4)(x+1)^8(x^2+2x-19)^6"; factors are printed in the given order.
inline std::string to_string(const Factorization& f, const std::string& var = "x") {
  std::string out;
  for (const auto& [q, m] : f) {
    out += "(" + q.to_string(var) + ")";
    if (m != 1) out += "^" + std::to_string(m);
  }
  return out.empty() ? "1" : out;
}

/// Parses "(x^2+1)^35(x-5)" style products of monic factors.
inline Factorization parse_factorization(const std::string& text) {
  Factorization out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
      continue;
    }
    if (text[pos] != '(') throw ParseError("expected '(' in factorization '" + text + "'", 0);
    const auto close = text.find(')', pos);
    if (close == std::string::npos) throw ParseError("unbalanced parentheses in '" + text + "'", 0);
    Factor f{IntPolynomial::parse(text.substr(pos + 1, close - pos - 1)), 1};
    pos = close + 1;
    if (pos < text.size() && text[pos] == '^') {
      std::size_t e0 = ++pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      f.multiplicity = std::stoi(text.substr(e0, pos - e0));
    }
    out.push_back(std::move(f));
  }
  return out;
}

}  // namespace matryoshka
