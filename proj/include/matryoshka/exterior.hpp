#pragma once

// Exact exterior algebra over the integers. A Form stores one integer
// coefficient per strictly increasing index tuple; the antisymmetric sign of
// any other ordering is absorbed into the coefficient at insertion time.

#include <gmpxx.h>

#include <algorithm>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "matryoshka/errors.hpp"

namespace matryoshka {

/// Sign (+1/-1) of the permutation sorting `seq`; 0 if `seq` has a repeat.
inline int sorting_sign(std::span<const int> seq) {
  int sign = 1;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    for (std::size_t j = i + 1; j < seq.size(); ++j) {
      if (seq[i] == seq[j]) return 0;
      if (seq[i] > seq[j]) sign = -sign;
    }
  }
  return sign;
}

/// Strictly increasing sequence of 1-based indices.
class IndexTuple {
 public:
  IndexTuple() = default;
  explicit IndexTuple(std::vector<int> indices) : indices_(std::move(indices)) { validate(); }
  IndexTuple(std::initializer_list<int> indices) : indices_(indices) { validate(); }

  std::size_t size() const noexcept { return indices_.size(); }
  bool empty() const noexcept { return indices_.empty(); }
  int operator[](std::size_t i) const { return indices_[i]; }
  int back() const { return indices_.back(); }
  const std::vector<int>& indices() const noexcept { return indices_; }
  auto begin() const noexcept { return indices_.begin(); }
  auto end() const noexcept { return indices_.end(); }

  bool contains(int index) const {
    return std::binary_search(indices_.begin(), indices_.end(), index);
  }

  /// Bit i-1 set for every index i. Requires all indices <= 64.
  std::uint64_t mask() const {
    std::uint64_t m = 0;
    for (int i : indices_) m |= std::uint64_t{1} << (i - 1);
    return m;
  }

  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < indices_.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(indices_[i]);
    }
    return out;
  }

  friend auto operator<=>(const IndexTuple&, const IndexTuple&) = default;
  friend bool operator==(const IndexTuple&, const IndexTuple&) = default;

 private:
  void validate() const {
    for (std::size_t i = 0; i < indices_.size(); ++i) {
      if (indices_[i] < 1) throw DimensionError("index tuple entries must be >= 1");
      if (i && indices_[i - 1] >= indices_[i])
        throw DimensionError("index tuple must be strictly increasing: " + to_string());
    }
  }

  std::vector<int> indices_;
};

/// Sorts `indices` and multiplies `coeff` by the sign of the sorting
/// permutation. A repeated index yields std::nullopt (the component is zero).
inline std::optional<std::pair<IndexTuple, mpz_class>> normalize_component(
    std::span<const int> indices, const mpz_class& coeff) {
  const int sign = sorting_sign(indices);
  if (sign == 0) return std::nullopt;
  std::vector<int> sorted(indices.begin(), indices.end());
  std::sort(sorted.begin(), sorted.end());
  return std::make_pair(IndexTuple(std::move(sorted)), sign > 0 ? mpz_class(coeff) : mpz_class(-coeff));
}

/// Degree-p alternating form on R^d with integer coefficients.
class Form {
 public:
  using ComponentMap = std::map<IndexTuple, mpz_class>;

  Form() = default;
  Form(int dim, int degree) : dim_(dim), degree_(degree) {
    if (dim < 0) throw DimensionError("negative dimension");
    if (degree < 0 || degree > dim)
      throw DegreeError("degree " + std::to_string(degree) + " outside [0, " + std::to_string(dim) + "]");
  }

  /// Builds a form from (ordered indices, coefficient) entries; entries with
  /// the same support are summed.
  static Form from_entries(int dim, int degree,
                           std::initializer_list<std::pair<std::initializer_list<int>, long>> entries) {
    Form f(dim, degree);
    for (const auto& [idx, c] : entries) {
      std::vector<int> v(idx);
      f.accumulate(v, mpz_class(c));
    }
    return f;
  }

  int dim() const noexcept { return dim_; }
  int degree() const noexcept { return degree_; }
  const ComponentMap& components() const noexcept { return components_; }
  std::size_t weight() const noexcept { return components_.size(); }
  bool is_zero() const noexcept { return components_.empty(); }

  bool is_special() const {
    return std::all_of(components_.begin(), components_.end(),
                       [](const auto& kv) { return abs(kv.second) == 1; });
  }

  mpz_class coefficient(const IndexTuple& t) const {
    auto it = components_.find(t);
    return it == components_.end() ? mpz_class(0) : it->second;
  }

  /// Component for an arbitrarily ordered index sequence, with its sign.
  mpz_class value(std::span<const int> indices) const {
    auto n = normalize_component(indices, 1);
    if (!n) return 0;
    return n->second * coefficient(n->first);
  }

  void set(const IndexTuple& t, const mpz_class& c) {
    check_tuple(t);
    if (c == 0)
      components_.erase(t);
    else
      components_[t] = c;
  }

  /// Adds `c` to the component addressed by an ordered index sequence.
  void accumulate(std::span<const int> indices, const mpz_class& c) {
    auto n = normalize_component(indices, c);
    if (!n) return;
    check_tuple(n->first);
    auto [it, inserted] = components_.try_emplace(n->first, 0);
    it->second += n->second;
    if (it->second == 0) components_.erase(it);
  }

  friend bool operator==(const Form&, const Form&) = default;

 private:
  void check_tuple(const IndexTuple& t) const {
    if (static_cast<int>(t.size()) != degree_)
      throw DegreeError("component of length " + std::to_string(t.size()) + " in a " +
                        std::to_string(degree_) + "-form");
    if (!t.empty() && t.back() > dim_)
      throw DimensionError("index " + std::to_string(t.back()) + " exceeds dimension " + std::to_string(dim_));
  }

  int dim_ = 0;
  int degree_ = 0;
  ComponentMap components_;
};

// ---------------------------------------------------------------------------
// Linear operations

inline Form add(const Form& f, const Form& g) {
  if (f.dim() != g.dim() || f.degree() != g.degree())
    throw DimensionError("add: forms of different dimension or degree");
  Form out = f;
  for (const auto& [t, c] : g.components()) out.accumulate(t.indices(), c);
  return out;
}

inline Form scale(const Form& f, const mpz_class& c) {
  Form out(f.dim(), f.degree());
  if (c == 0) return out;
  for (const auto& [t, v] : f.components()) out.set(t, v * c);
  return out;
}

inline Form negate(const Form& f) { return scale(f, -1); }

inline Form operator+(const Form& f, const Form& g) { return add(f, g); }
inline Form operator-(const Form& f) { return negate(f); }
inline Form operator-(const Form& f, const Form& g) { return add(f, negate(g)); }

/// Unit 0-form in `dim` dimensions.
inline Form unit_form(int dim) {
  Form f(dim, 0);
  f.set(IndexTuple{}, 1);
  return f;
}

// ---------------------------------------------------------------------------
// Products and dualities

inline Form wedge(const Form& f, const Form& g) {
  if (f.dim() != g.dim()) throw DimensionError("wedge: dimension mismatch");
  if (f.degree() + g.degree() > f.dim()) throw DegreeError("wedge: degree exceeds dimension");
  Form out(f.dim(), f.degree() + g.degree());
  std::vector<int> joined;
  for (const auto& [a, ca] : f.components()) {
    for (const auto& [b, cb] : g.components()) {
      joined.assign(a.begin(), a.end());
      joined.insert(joined.end(), b.begin(), b.end());
      out.accumulate(joined, ca * cb);
    }
  }
  return out;
}

/// Orientation of R^d used by the Hodge star.
enum class Orientation {
  /// e_1 ^ ... ^ e_d is positive.
  standard,
  /// The tenth axis, written "0", comes first: e_10 ^ e_1 ^ ... ^ e_9 ^ e_11 ^ ...
  /// is positive. Agrees with `standard` below ten dimensions and is its
  /// negative from ten dimensions on.
  zero_first,
};

inline int orientation_sign(int dim, Orientation o) {
  return (o == Orientation::zero_first && dim >= 10) ? -1 : 1;
}

/// Hodge star with e_mu ^ *e_mu equal to the positive volume form.
inline Form hodge_star(const Form& f, Orientation orientation = Orientation::standard) {
  const int d = f.dim();
  const int osign = orientation_sign(d, orientation);
  Form out(d, d - f.degree());
  std::vector<int> joined;
  for (const auto& [t, c] : f.components()) {
    std::vector<int> complement;
    complement.reserve(d - t.size());
    for (int i = 1; i <= d; ++i)
      if (!t.contains(i)) complement.push_back(i);
    joined.assign(t.begin(), t.end());
    joined.insert(joined.end(), complement.begin(), complement.end());
    out.set(IndexTuple(std::move(complement)), c * sorting_sign(joined) * osign);
  }
  return out;
}

/// f(e_i, e_j, ., ..., .) on the orthogonal complement of the (i, j) plane,
/// remaining indices relabeled order-preservingly to 1..d-2.
inline Form contract_plane(const Form& f, int i, int j) {
  if (i == j) throw DegeneratePlaneError("contract_plane: i == j");
  if (f.degree() < 2) throw DegreeError("contract_plane: degree < 2");
  if (i < 1 || j < 1 || i > f.dim() || j > f.dim()) throw DimensionError("contract_plane: index out of range");
  auto relabel = [&](int k) { return k - (k > i ? 1 : 0) - (k > j ? 1 : 0); };
  Form out(f.dim() - 2, f.degree() - 2);
  std::vector<int> ordered;
  for (const auto& [t, c] : f.components()) {
    if (!t.contains(i) || !t.contains(j)) continue;
    ordered = {i, j};
    std::vector<int> rest;
    for (int k : t)
      if (k != i && k != j) {
        ordered.push_back(k);
        rest.push_back(relabel(k));
      }
    out.set(IndexTuple(std::move(rest)), c * sorting_sign(ordered));
  }
  return out;
}

/// Keeps the components supported inside `subset`, relabeled to 1..|subset|.
inline Form restrict_to(const Form& f, const IndexTuple& subset) {
  if (!subset.empty() && subset.back() > f.dim()) throw DimensionError("restrict: index out of range");
  const int n = static_cast<int>(subset.size());
  if (f.degree() > n) throw DegreeError("restrict: subset smaller than the degree");
  std::vector<int> position(f.dim() + 1, 0);
  for (int k = 0; k < n; ++k) position[subset[k]] = k + 1;
  Form out(n, f.degree());
  for (const auto& [t, c] : f.components()) {
    std::vector<int> image;
    for (int k : t) {
      if (!position[k]) break;
      image.push_back(position[k]);
    }
    if (image.size() == t.size()) out.set(IndexTuple(std::move(image)), c);
  }
  return out;
}

/// Identity tuple (1, ..., n).
inline IndexTuple iota_tuple(int n) {
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = i + 1;
  return IndexTuple(std::move(v));
}

}  // namespace matryoshka
