#pragma once

// Randomized property suites over special forms with a fixed seed.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "matryoshka/exterior.hpp"
#include "matryoshka/signed_permutation.hpp"
#include "matryoshka/spectral.hpp"
#include "matryoshka/symmetry.hpp"

namespace matryoshka {

inline constexpr std::uint64_t kPropertySeed = 20240611;

/// Each p-subset of {1..d} is kept with probability `density`, with a random sign.
inline Form random_special_form(int d, int p, std::mt19937_64& rng, double density = 0.3) {
  Form f(d, p);
  std::bernoulli_distribution keep(density), neg(0.5);
  std::vector<int> idx(p);
  // Walk p-subsets in lexicographic order.
  for (int i = 0; i < p; ++i) idx[i] = i + 1;
  while (true) {
    if (keep(rng)) f.set(IndexTuple(idx), neg(rng) ? -1 : 1);
    int k = p - 1;
    while (k >= 0 && idx[k] == d - p + k + 1) --k;
    if (k < 0) break;
    ++idx[k];
    for (int j = k + 1; j < p; ++j) idx[j] = idx[j - 1] + 1;
  }
  return f;
}

struct PropertyResult {
  PropertyResult() = default;
  explicit PropertyResult(std::string n) : name(std::move(n)) {}

  std::string name;
  int cases = 0;
  int failures = 0;
  std::string first_failure;

  bool passed() const { return cases > 0 && failures == 0; }

  void record(bool ok, const std::string& what) {
    ++cases;
    if (!ok && failures++ == 0) first_failure = what;
  }
};

/// star(star f) = (-1)^{p(d-p)} f.
inline PropertyResult property_double_star(int cases, std::uint64_t seed = kPropertySeed) {
  PropertyResult r{"double Hodge star sign"};
  std::mt19937_64 rng(seed);
  for (int c = 0; c < cases; ++c) {
    const int d = std::uniform_int_distribution<int>(1, 10)(rng);
    const int p = std::uniform_int_distribution<int>(0, d)(rng);
    const Form f = random_special_form(d, p, rng);
    const int sign = (p * (d - p)) % 2 ? -1 : 1;
    const Form ss = hodge_star(hodge_star(f));
    r.record(ss == scale(f, sign), "d=" + std::to_string(d) + " p=" + std::to_string(p));
  }
  return r;
}

/// act(a*b, f) = act(a, act(b, f)).
inline PropertyResult property_action_homomorphism(int cases, std::uint64_t seed = kPropertySeed + 1) {
  PropertyResult r{"action homomorphism"};
  std::mt19937_64 rng(seed);
  for (int c = 0; c < cases; ++c) {
    const int d = std::uniform_int_distribution<int>(2, 10)(rng);
    const int p = std::uniform_int_distribution<int>(1, d)(rng);
    const Form f = random_special_form(d, p, rng);
    const auto a = SignedPermutation::random(d, rng), b = SignedPermutation::random(d, rng);
    r.record(act(a * b, f) == act(a, act(b, f)), "a=" + a.to_string() + " b=" + b.to_string());
  }
  return r;
}

/// Pruned census equals exhaustive enumeration of S_d x| Z_2^d for d <= 5.
inline PropertyResult property_census_oracle(int cases, std::uint64_t seed = kPropertySeed + 2) {
  PropertyResult r{"census against brute force, d <= 5"};
  std::mt19937_64 rng(seed);
  for (int c = 0; c < cases; ++c) {
    const int d = std::uniform_int_distribution<int>(2, 5)(rng);
    const int p = std::uniform_int_distribution<int>(1, d)(rng);
    const double density = std::uniform_real_distribution<double>(0.2, 0.8)(rng);
    const Form f = random_special_form(d, p, rng, density);
    const auto fast = compute_census(f);
    const auto slow = brute_force_census(f);
    const bool ok = fast.perm_symmetries == slow.perm_symmetries &&
                    fast.perm_antisymmetries == slow.perm_antisymmetries &&
                    fast.orth_symmetries == slow.orth_symmetries &&
                    fast.orth_antisymmetries == slow.orth_antisymmetries &&
                    fast.orth_symmetry_count == slow.orth_symmetry_count &&
                    fast.orth_antisymmetry_count == slow.orth_antisymmetry_count;
    r.record(ok, "d=" + std::to_string(d) + " p=" + std::to_string(p) + " weight " + std::to_string(f.weight()));
  }
  return r;
}

/// char_poly(M) evaluated at M is zero, for endomorphism matrices of size <= 45.
inline PropertyResult property_cayley_hamilton(int cases, std::uint64_t seed = kPropertySeed + 3) {
  PropertyResult r{"Cayley-Hamilton, size <= 45"};
  std::mt19937_64 rng(seed);
  for (int c = 0; c < cases; ++c) {
    const int k = std::uniform_int_distribution<int>(1, 2)(rng);
    const int d = std::uniform_int_distribution<int>(2 * k, 10)(rng);
    const Form f = random_special_form(d, 2 * k, rng);
    const IntMatrix M = endomorphism_matrix(f, k).matrix;
    r.record(evaluate(char_poly(M), M).is_zero(), "d=" + std::to_string(d) + " k=" + std::to_string(k));
  }
  return r;
}

/// Characteristic polynomial is unchanged by a random O(d,Z) element.
inline PropertyResult property_charpoly_invariance(int cases, std::uint64_t seed = kPropertySeed + 4) {
  PropertyResult r{"char poly invariant under O(d,Z)"};
  std::mt19937_64 rng(seed);
  for (int c = 0; c < cases; ++c) {
    const int k = std::uniform_int_distribution<int>(1, 3)(rng);
    const int d = std::uniform_int_distribution<int>(2 * k, k == 3 ? 9 : 10)(rng);
    const Form f = random_special_form(d, 2 * k, rng);
    const auto g = SignedPermutation::random(d, rng);
    r.record(char_poly(endomorphism_matrix(f, k).matrix) == char_poly(endomorphism_matrix(act(g, f), k).matrix),
           "d=" + std::to_string(d) + " k=" + std::to_string(k) + " g=" + g.to_string());
  }
  return r;
}

inline std::vector<PropertyResult> run_property_suites(int cases = 100) {
  return {property_double_star(cases), property_action_homomorphism(cases), property_census_oracle(cases),
          property_cayley_hamilton(cases), property_charpoly_invariance(cases)};
}

}  // namespace matryoshka
