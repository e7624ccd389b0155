#pragma once

// Finite subgroups of S_d x| Z_2^d stored as explicit sorted element sets.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <string>
#include <unordered_set>
#include <vector>

#include "matryoshka/signed_permutation.hpp"

namespace matryoshka {

inline constexpr std::size_t kDefaultClosureBound = 1'000'000;

class Group {
 public:
  Group() = default;

  /// Takes an element set that is already known to be a group.
  Group(int d, std::vector<std::uint64_t> codes) : d_(d), codes_(std::move(codes)) {
    std::sort(codes_.begin(), codes_.end());
    codes_.erase(std::unique(codes_.begin(), codes_.end()), codes_.end());
  }

  static Group trivial(int d) { return Group(d, {SignedPermutation::identity(d).code()}); }

  /// Closure of `generators` by breadth-first products.
  static Group generated_by(int d, const std::vector<SignedPermutation>& generators,
                            std::size_t bound = kDefaultClosureBound) {
    const SignedPermutation id = SignedPermutation::identity(d);
    std::unordered_set<std::uint64_t> seen{id.code()};
    std::deque<SignedPermutation> queue{id};
    while (!queue.empty()) {
      const SignedPermutation x = queue.front();
      queue.pop_front();
      for (const auto& g : generators) {
        const SignedPermutation y = x * g;
        if (seen.insert(y.code()).second) {
          if (seen.size() > bound)
            throw SearchBoundError("group closure exceeded " + std::to_string(bound) + " elements");
          queue.push_back(y);
        }
      }
    }
    Group out(d, std::vector<std::uint64_t>(seen.begin(), seen.end()));
    out.generators_ = generators;
    return out;
  }

  int dim() const noexcept { return d_; }
  std::size_t order() const noexcept { return codes_.size(); }
  const std::vector<std::uint64_t>& codes() const noexcept { return codes_; }

  SignedPermutation element(std::size_t k) const { return SignedPermutation::from_code(d_, codes_[k]); }

  std::vector<SignedPermutation> elements() const {
    std::vector<SignedPermutation> out;
    out.reserve(codes_.size());
    for (auto c : codes_) out.push_back(SignedPermutation::from_code(d_, c));
    return out;
  }

  bool contains(const SignedPermutation& g) const {
    return std::binary_search(codes_.begin(), codes_.end(), g.code());
  }

  bool is_subset_of(const Group& other) const {
    return std::includes(other.codes_.begin(), other.codes_.end(), codes_.begin(), codes_.end());
  }

  /// A small generating set, found greedily (highest element order first).
  const std::vector<SignedPermutation>& generators() const {
    if (generators_.empty() && order() > 1) generators_ = greedy_generators();
    return generators_;
  }

  /// Counts of sigma cycle types, keyed like "1^1 7^1".
  std::map<std::string, std::size_t> cycle_type_histogram() const {
    std::map<std::string, std::size_t> h;
    for (auto c : codes_) ++h[SignedPermutation::from_code(d_, c).cycle_type_string()];
    return h;
  }

  /// True iff the underlying permutations act transitively on {1..d}.
  bool is_transitive() const {
    if (d_ == 0) return true;
    std::vector<bool> reached(d_, false);
    reached[0] = true;
    for (auto c : codes_) reached[SignedPermutation::from_code(d_, c).image(1) - 1] = true;
    return std::all_of(reached.begin(), reached.end(), [](bool b) { return b; });
  }

  bool is_abelian() const {
    const auto& gens = generators();
    for (const auto& a : gens)
      for (const auto& b : gens)
        if (!(a * b == b * a)) return false;
    return true;
  }

  Group filter(const auto& predicate) const {
    std::vector<std::uint64_t> kept;
    for (auto c : codes_)
      if (predicate(SignedPermutation::from_code(d_, c))) kept.push_back(c);
    return Group(d_, std::move(kept));
  }

  friend bool operator==(const Group& a, const Group& b) { return a.d_ == b.d_ && a.codes_ == b.codes_; }

 private:
  std::vector<SignedPermutation> greedy_generators() const {
    std::vector<std::pair<int, std::uint64_t>> by_order;
    by_order.reserve(codes_.size());
    for (auto c : codes_) by_order.emplace_back(-SignedPermutation::from_code(d_, c).order(), c);
    std::sort(by_order.begin(), by_order.end());
    std::vector<SignedPermutation> gens;
    Group span = trivial(d_);
    for (const auto& [neg_order, c] : by_order) {
      if (span.order() == order()) break;
      const auto g = SignedPermutation::from_code(d_, c);
      if (span.contains(g)) continue;
      gens.push_back(g);
      span = generated_by(d_, gens, order());
    }
    return gens;
  }

  int d_ = 0;
  std::vector<std::uint64_t> codes_;
  mutable std::vector<SignedPermutation> generators_;
};

/// b^{-1} a^{-1} b a.
inline SignedPermutation commutator(const SignedPermutation& a, const SignedPermutation& b) {
  return b.inverse() * a.inverse() * b * a;
}

/// Subgroup generated by all commutators of G: the normal closure in G of
/// the commutators of a generating set.
inline Group commutator_subgroup(const Group& G) {
  const auto& gens = G.generators();
  std::vector<SignedPermutation> ngens;
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      const auto c = commutator(gens[i], gens[j]);
      if (!(c == SignedPermutation::identity(G.dim()))) ngens.push_back(c);
    }
  Group N = Group::generated_by(G.dim(), ngens, G.order());
  bool changed = true;
  while (changed) {
    changed = false;
    const auto current = ngens;
    for (const auto& g : gens) {
      for (const auto& n : current) {
        const auto conj = g.inverse() * n * g;
        if (!N.contains(conj)) {
          ngens.push_back(conj);
          N = Group::generated_by(G.dim(), ngens, G.order());
          changed = true;
        }
      }
    }
  }
  return N;
}

}  // namespace matryoshka
