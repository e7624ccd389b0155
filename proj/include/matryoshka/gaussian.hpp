#pragma once

// Gaussian integers a + b i over GMP integers.

#include <gmpxx.h>

#include <string>

namespace matryoshka {

struct Gaussian {
  mpz_class re = 0;
  mpz_class im = 0;

  Gaussian() = default;
  Gaussian(mpz_class r, mpz_class i = 0) : re(std::move(r)), im(std::move(i)) {}
  Gaussian(long r, long i = 0) : re(r), im(i) {}

  bool is_zero() const { return re == 0 && im == 0; }

  Gaussian conj() const { return {re, -im}; }

  Gaussian& operator+=(const Gaussian& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  friend Gaussian operator+(Gaussian a, const Gaussian& b) { return a += b; }
  friend Gaussian operator-(const Gaussian& a) { return {-a.re, -a.im}; }
  friend Gaussian operator-(const Gaussian& a, const Gaussian& b) { return {a.re - b.re, a.im - b.im}; }
  friend Gaussian operator*(const Gaussian& a, const Gaussian& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend bool operator==(const Gaussian& a, const Gaussian& b) { return a.re == b.re && a.im == b.im; }

  std::string to_string() const { return "(" + re.get_str() + (im < 0 ? "" : "+") + im.get_str() + "i)"; }
};

}  // namespace matryoshka
