#pragma once

// Quadratic invariants of 2-forms in four dimensions, the table of special
// 2-form representatives, and vertex-space graphs of supports.

#include <gmpxx.h>

#include <algorithm>
#include <array>
#include <bit>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "matryoshka/errors.hpp"
#include "matryoshka/exterior.hpp"

namespace matryoshka {

/// sum_{a,b} f_ab f_ba over ordered pairs = -2 sum of squared components.
inline mpz_class invariant_I1(const Form& f) {
  if (f.degree() != 2) throw DimensionError("I1 needs a 2-form");
  mpz_class s = 0;
  for (const auto& [t, c] : f.components()) s += c * c;
  return -2 * s;
}

/// sum over ordered quadruples of eps_abcd f_ab f_cd; d = 4 only.
inline mpz_class invariant_I2(const Form& f) {
  if (f.degree() != 2 || f.dim() != 4) throw DimensionError("I2 needs a 2-form in four dimensions");
  mpz_class s = 0;
  std::array<int, 4> q{};
  for (q[0] = 1; q[0] <= 4; ++q[0])
    for (q[1] = 1; q[1] <= 4; ++q[1])
      for (q[2] = 1; q[2] <= 4; ++q[2])
        for (q[3] = 1; q[3] <= 4; ++q[3]) {
          const int eps = sorting_sign(q);
          if (eps == 0) continue;
          s += eps * f.value(std::span<const int>(q.data(), 2)) * f.value(std::span<const int>(q.data() + 2, 2));
        }
  return s;
}

struct ClassificationEntry {
  std::string label;
  Form representative;
  mpz_class I1;
  mpz_class I2;
  bool democratic = false;
};

/// The 19 representative special 2-forms in four dimensions, components
/// (12, 13, 14, 23, 24, 34), with their invariants and democracy flags.
inline const std::vector<ClassificationEntry>& table1() {
  static const std::vector<ClassificationEntry> rows = [] {
    struct Raw {
      const char* label;
      std::array<int, 6> e;
      int I1, I2;
      bool dem;
    };
    const Raw raw[] = {
        {"A", {1, 0, 0, 0, 0, 0}, -2, 0, false},      {"B1", {1, 1, 0, 0, 0, 0}, -4, 0, false},
        {"B2", {1, 0, 0, 0, 0, 1}, -4, 8, true},       {"B3", {1, 0, 0, 0, 0, -1}, -4, -8, true},
        {"C1", {1, 1, 1, 0, 0, 0}, -6, 0, false},      {"C2", {1, 1, 0, 0, -1, 0}, -6, 8, false},
        {"C3", {1, 1, 0, 0, 1, 0}, -6, -8, false},     {"D1", {1, 1, 1, 1, 0, 0}, -8, 8, false},
        {"D2", {1, 1, 1, -1, 0, 0}, -8, -8, false},    {"D3", {1, 1, 0, 0, -1, 1}, -8, 16, true},
        {"D4", {1, 1, 0, 0, 1, 1}, -8, 0, true},       {"D5", {1, 1, 0, 0, 1, -1}, -8, -16, true},
        {"E1", {1, 1, 1, 1, -1, 0}, -10, 16, false},   {"E2", {1, 1, 1, 1, 1, 0}, -10, 0, false},
        {"E3", {1, 1, 1, -1, 1, 0}, -10, -16, false},  {"F1", {1, 1, 1, 1, -1, 1}, -12, 24, true},
        {"F2", {1, 1, 1, 1, 1, 1}, -12, 8, true},      {"F3", {1, 1, 1, -1, -1, -1}, -12, -8, true},
        {"F4", {1, 1, 1, -1, 1, -1}, -12, -24, true},
    };
    static const std::array<std::array<int, 2>, 6> pairs = {{{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}};
    std::vector<ClassificationEntry> out;
    for (const auto& r : raw) {
      Form f(4, 2);
      for (int k = 0; k < 6; ++k)
        if (r.e[k] != 0) f.set(IndexTuple{pairs[k][0], pairs[k][1]}, r.e[k]);
      out.push_back({r.label, f, r.I1, r.I2, r.dem});
    }
    return out;
  }();
  return rows;
}

/// The table entry with matching (I1, I2), or nullopt when unmatched.
inline std::optional<ClassificationEntry> classify_2form_4d(const Form& f) {
  const mpz_class i1 = invariant_I1(f), i2 = invariant_I2(f);
  for (const auto& e : table1())
    if (e.I1 == i1 && e.I2 == i2) return e;
  return std::nullopt;
}

/// distance -> number of other vertices at that distance.
using ValenceProfile = std::map<int, std::size_t>;

struct VertexGraph {
  int p = 0;
  std::vector<IndexTuple> vertices;
  /// (i, j, distance) for i < j and distance < p.
  std::vector<std::array<std::size_t, 3>> edges;
  /// Per vertex, counts at every distance 1..p.
  std::vector<ValenceProfile> profiles;
};

inline int support_distance(const IndexTuple& s, const IndexTuple& t) {
  return static_cast<int>(s.size()) - std::popcount(s.mask() & t.mask());
}

inline VertexGraph vertex_graph(const Form& f) {
  VertexGraph g;
  g.p = f.degree();
  for (const auto& [t, c] : f.components()) g.vertices.push_back(t);
  const std::size_t n = g.vertices.size();
  g.profiles.assign(n, {});
  for (auto& prof : g.profiles)
    for (int d = 1; d <= g.p; ++d) prof[d] = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const int d = support_distance(g.vertices[i], g.vertices[j]);
      ++g.profiles[i][d];
      ++g.profiles[j][d];
      if (d < g.p) g.edges.push_back({i, j, static_cast<std::size_t>(d)});
    }
  return g;
}

struct ProfileClass {
  ValenceProfile profile;
  std::size_t count = 0;
};

/// Vertices grouped by identical profile, largest class first.
inline std::vector<ProfileClass> valence_profile(const Form& f) {
  std::map<ValenceProfile, std::size_t> counts;
  for (const auto& prof : vertex_graph(f).profiles) ++counts[prof];
  std::vector<ProfileClass> out;
  for (const auto& [prof, n] : counts) out.push_back({prof, n});
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.count > b.count; });
  return out;
}

inline std::string to_string(const ValenceProfile& p) {
  std::string out = "{";
  for (const auto& [d, n] : p) {
    if (out.size() > 1) out += ", ";
    out += "d" + std::to_string(d) + ":" + std::to_string(n);
  }
  return out + "}";
}

}  // namespace matryoshka
