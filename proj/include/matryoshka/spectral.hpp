#pragma once

// Forms of degree 2k as endomorphisms of k-forms: index ranking, matrix
// assembly, characteristic polynomials, eigenspace and stabilizer dimensions.

#include <gmpxx.h>

#include <bit>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "matryoshka/charpoly.hpp"
#include "matryoshka/errors.hpp"
#include "matryoshka/exterior.hpp"
#include "matryoshka/int_matrix.hpp"
#include "matryoshka/polynomial.hpp"

namespace matryoshka {

/// binom(12,4); override with MATRYOSHKA_MAX_MATRIX.
inline constexpr std::size_t kDefaultMaxMatrixSize = 495;

inline std::size_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  std::size_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::size_t>(n - k + i) / static_cast<std::size_t>(i);
  return r;
}

/// 1 + sum_i binom(m_i - 1, i) for m_1 < ... < m_k.
inline std::size_t rank_tuple(const IndexTuple& t, int D, int k) {
  if (static_cast<int>(t.size()) != k) throw RankError("tuple " + t.to_string() + " does not have length " + std::to_string(k));
  if (k > 0 && t.back() > D) throw RankError("tuple " + t.to_string() + " exceeds dimension " + std::to_string(D));
  std::size_t a = 1;
  for (int i = 0; i < k; ++i) a += binomial(t[i] - 1, i + 1);
  return a;
}

inline IndexTuple unrank(std::size_t A, int D, int k) {
  if (A < 1 || A > binomial(D, k)) throw RankError("rank " + std::to_string(A) + " outside 1.." + std::to_string(binomial(D, k)));
  std::size_t rem = A - 1;
  std::vector<int> idx(k);
  int hi = D;
  for (int i = k; i >= 1; --i) {
    int m = hi;
    while (binomial(m - 1, i) > rem) --m;
    idx[i - 1] = m;
    rem -= binomial(m - 1, i);
    hi = m - 1;
  }
  return IndexTuple(idx);
}

struct EndomorphismMatrix {
  IntMatrix matrix;
  int dim = 0;
  int k = 0;
  std::string source;

  std::size_t size() const { return matrix.rows(); }
};

/// M[A][B] = f on unrank(A) followed by unrank(B). A zero `max_size` uses
/// the environment or default cap.
inline EndomorphismMatrix endomorphism_matrix(const Form& f, int k, std::string source = "", std::size_t max_size = 0) {
  if (k < 1 || f.degree() != 2 * k)
    throw DegreeError("form of degree " + std::to_string(f.degree()) + " is not an endomorphism of " + std::to_string(k) + "-forms");
  const int D = f.dim();
  const std::size_t n = binomial(D, k);
  const std::size_t cap = max_size ? max_size : env_bound("MATRYOSHKA_MAX_MATRIX", kDefaultMaxMatrixSize);
  if (n > cap) throw SearchBoundError("matrix size " + std::to_string(n) + " exceeds bound " + std::to_string(cap));

  EndomorphismMatrix out{IntMatrix(n, n), D, k, std::move(source)};
  const int p = 2 * k;
  std::vector<int> left, right, seq;
  for (const auto& [t, c] : f.components()) {
    // every split of the support into two k-subsets
    for (std::uint32_t sel = 0; sel < (1u << p); ++sel) {
      if (std::popcount(sel) != k) continue;
      left.clear();
      right.clear();
      for (int i = 0; i < p; ++i) (sel >> i & 1 ? left : right).push_back(t[i]);
      seq = left;
      seq.insert(seq.end(), right.begin(), right.end());
      const std::size_t a = rank_tuple(IndexTuple(left), D, k) - 1;
      const std::size_t b = rank_tuple(IndexTuple(right), D, k) - 1;
      out.matrix(a, b) = sorting_sign(seq) * c;
    }
  }
  return out;
}

/// Dimension of ker factor(M). Throws FactorError unless factor divides the
/// characteristic polynomial (pass it in when already known).
inline std::size_t eigenspace_dimension(const IntMatrix& M, const IntPolynomial& factor,
                                        const std::optional<IntPolynomial>& known_char_poly = std::nullopt) {
  if (!factor.is_monic()) throw FactorError("factor " + factor.to_string() + " is not monic");
  const IntPolynomial cp = known_char_poly ? *known_char_poly : char_poly(M);
  if (!cp.divisible_by(factor)) throw FactorError(factor.to_string() + " does not divide the characteristic polynomial");
  return M.rows() - rank(evaluate(factor, M));
}

/// Infinitesimal rotation E_ab (a < b, E e_b = e_a, E e_a = -e_b) applied as
/// a derivation to every slot of f.
inline Form rotate_derivation(const Form& f, int a, int b) {
  Form out(f.dim(), f.degree());
  std::vector<int> idx;
  for (const auto& [t, c] : f.components()) {
    for (std::size_t s = 0; s < t.size(); ++s) {
      idx.assign(t.begin(), t.end());
      if (t[s] == b) {
        idx[s] = a;
        out.accumulate(idx, c);
      } else if (t[s] == a) {
        idx[s] = b;
        out.accumulate(idx, -c);
      }
    }
  }
  return out;
}

/// dim { X in so(d) : X.f = 0 }.
inline std::size_t stabilizer_algebra_dimension(const Form& f) {
  const int d = f.dim();
  std::vector<Form> images;
  std::map<IndexTuple, std::size_t> row_of;
  for (int a = 1; a <= d; ++a)
    for (int b = a + 1; b <= d; ++b) {
      images.push_back(rotate_derivation(f, a, b));
      for (const auto& [t, c] : images.back().components()) row_of.emplace(t, row_of.size());
    }
  IntMatrix L(row_of.size(), images.size());
  for (std::size_t j = 0; j < images.size(); ++j)
    for (const auto& [t, c] : images[j].components()) L(row_of.at(t), j) = c;
  return images.size() - rank(L);
}

/// Divides out candidate factors (each tried with its x -> -x twin) and
/// returns the factorization if nothing is left over.
inline std::optional<Factorization> factor_with(const IntPolynomial& p, const std::vector<IntPolynomial>& candidates) {
  std::vector<IntPolynomial> pool;
  auto add = [&](const IntPolynomial& q) {
    IntPolynomial m = q.leading() < 0 ? -q : q;
    if (!m.is_monic() || m.degree() < 1) return;
    for (const auto& e : pool)
      if (e == m) return;
    pool.push_back(m);
  };
  add(IntPolynomial::x());
  for (const auto& q : candidates) {
    add(q);
    IntPolynomial r = q.reflect();
    if (r.degree() % 2 == 1) r = -r;
    add(r);
  }
  Factorization out;
  IntPolynomial rest = p;
  for (const auto& q : pool) {
    int m = 0;
    while (rest.degree() >= q.degree()) {
      auto [quot, rem] = rest.divmod(q);
      if (!rem.is_zero()) break;
      rest = quot;
      ++m;
    }
    if (m > 0) out.push_back({q, m});
  }
  if (!(rest == IntPolynomial::constant(1))) return std::nullopt;
  return out;
}

}  // namespace matryoshka
