#pragma once

// Characteristic polynomials of integer matrices.
//
// char_poly reduces to Hessenberg form modulo word-sized primes and lifts by
// the Chinese remainder theorem until the modulus exceeds twice a Hadamard
// style coefficient bound. char_poly_berkowitz is a division-free route over
// Z used as an independent check.

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "matryoshka/errors.hpp"
#include "matryoshka/int_matrix.hpp"
#include "matryoshka/polynomial.hpp"

namespace matryoshka {

namespace detail {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return a * b % p; }

inline std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  for (a %= p; e; e >>= 1) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
  }
  return r;
}

// Deterministic Miller-Rabin for n < 2^32.
inline bool is_prime_u32(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2u, 3u, 5u, 7u})
    if (n % q == 0) return n == q;
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2u, 7u, 61u}) {
    if (a % n == 0) continue;
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

/// Characteristic polynomial of M mod p, ascending coefficients (monic).
inline std::vector<std::uint64_t> char_poly_mod(const IntMatrix& M, std::uint64_t p) {
  const std::size_t n = M.rows();
  std::vector<std::uint64_t> H(n * n);
  auto h = [&](std::size_t i, std::size_t j) -> std::uint64_t& { return H[i * n + j]; };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) h(i, j) = mpz_fdiv_ui(M(i, j).get_mpz_t(), p);

  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t piv = m;
    while (piv < n && h(piv, m - 1) == 0) ++piv;
    if (piv == n) continue;
    if (piv != m) {
      for (std::size_t j = 0; j < n; ++j) std::swap(h(piv, j), h(m, j));
      for (std::size_t i = 0; i < n; ++i) std::swap(h(i, piv), h(i, m));
    }
    const std::uint64_t inv = powmod(h(m, m - 1), p - 2, p);
    for (std::size_t i = m + 1; i < n; ++i) {
      if (h(i, m - 1) == 0) continue;
      const std::uint64_t u = mulmod(h(i, m - 1), inv, p);
      for (std::size_t j = 0; j < n; ++j) h(i, j) = (h(i, j) + p - mulmod(u, h(m, j), p)) % p;
      for (std::size_t r = 0; r < n; ++r) h(r, m) = (h(r, m) + mulmod(u, h(r, i), p)) % p;
    }
  }

  // p_k = (x - h_kk) p_{k-1} - sum_i h_{k-i,k} (prod_j h_{j,j-1}) p_{k-i-1}, 0-based.
  std::vector<std::vector<std::uint64_t>> P(n + 1);
  P[0] = {1};
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<std::uint64_t> next(k + 2, 0);
    for (std::size_t t = 0; t <= k; ++t) {
      next[t + 1] = (next[t + 1] + P[k][t]) % p;
      next[t] = (next[t] + p - mulmod(h(k, k), P[k][t], p)) % p;
    }
    std::uint64_t prod = 1;
    for (std::size_t i = 1; i <= k; ++i) {
      prod = mulmod(prod, h(k - i + 1, k - i), p);
      if (prod == 0) break;
      const std::uint64_t c = mulmod(h(k - i, k), prod, p);
      if (c == 0) continue;
      for (std::size_t t = 0; t < P[k - i].size(); ++t) next[t] = (next[t] + p - mulmod(c, P[k - i][t], p)) % p;
    }
    P[k + 1] = std::move(next);
  }
  return P[n];
}

/// Upper bound on |coefficient| of the characteristic polynomial:
/// prod (1 + ceil(||row_i||)).
inline mpz_class char_poly_bound(const IntMatrix& M) {
  mpz_class bound = 1, s, r;
  for (std::size_t i = 0; i < M.rows(); ++i) {
    s = 0;
    for (std::size_t j = 0; j < M.cols(); ++j) s += M(i, j) * M(i, j);
    mpz_sqrt(r.get_mpz_t(), s.get_mpz_t());
    if (r * r < s) ++r;
    bound *= 1 + r;
  }
  return bound;
}

}  // namespace detail

/// Exact characteristic polynomial det(xI - M) by multimodular Hessenberg reduction.
inline IntPolynomial char_poly(const IntMatrix& M) {
  if (!M.is_square()) throw DimensionError("characteristic polynomial needs a square matrix");
  const std::size_t n = M.rows();
  if (n == 0) return IntPolynomial::constant(1);
  const mpz_class target = 2 * detail::char_poly_bound(M);

  std::vector<mpz_class> x(n + 1, 0);
  mpz_class modulus = 1, inv, diff, pz;
  std::uint64_t p = (1ull << 31);
  while (modulus <= target) {
    do --p;
    while (!detail::is_prime_u32(p));
    const auto r = detail::char_poly_mod(M, p);
    pz = static_cast<unsigned long>(p);
    mpz_invert(inv.get_mpz_t(), mpz_class(modulus % pz).get_mpz_t(), pz.get_mpz_t());
    for (std::size_t k = 0; k <= n; ++k) {
      // x_k += modulus * ((r_k - x_k) * modulus^-1 mod p)
      diff = mpz_class(static_cast<unsigned long>(r[k])) - x[k];
      diff = diff * inv;
      mpz_fdiv_r(diff.get_mpz_t(), diff.get_mpz_t(), pz.get_mpz_t());
      x[k] += modulus * diff;
    }
    modulus *= pz;
  }
  const mpz_class half = modulus / 2;
  for (auto& v : x)
    if (v > half) v -= modulus;
  return IntPolynomial(std::move(x));
}

/// det(xI - M) by Berkowitz's division-free algorithm over Z.
inline IntPolynomial char_poly_berkowitz(const IntMatrix& M) {
  if (!M.is_square()) throw DimensionError("characteristic polynomial needs a square matrix");
  const std::size_t n = M.rows();
  if (n == 0) return IntPolynomial::constant(1);
  // Descending coefficients of the leading r x r block's polynomial.
  std::vector<mpz_class> P{1, -M(0, 0)};
  std::vector<mpz_class> v, w;
  for (std::size_t r = 1; r < n; ++r) {
    std::vector<mpz_class> Q(r + 2);
    Q[0] = 1;
    Q[1] = -M(r, r);
    v.assign(r, 0);
    for (std::size_t i = 0; i < r; ++i) v[i] = M(i, r);
    for (std::size_t k = 0; k < r; ++k) {
      mpz_class dot = 0;
      for (std::size_t i = 0; i < r; ++i) dot += M(r, i) * v[i];
      Q[k + 2] = -dot;
      if (k + 1 == r) break;
      w.assign(r, 0);
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
          if (M(i, j) != 0) w[i] += M(i, j) * v[j];
      v.swap(w);
    }
    std::vector<mpz_class> next(r + 2, 0);
    for (std::size_t i = 0; i < r + 2; ++i)
      for (std::size_t j = 0; j <= std::min(i, r); ++j) next[i] += Q[i - j] * P[j];
    P = std::move(next);
  }
  return IntPolynomial(std::vector<mpz_class>(P.rbegin(), P.rend()));
}

}  // namespace matryoshka
