#pragma once

// Embedding constructions and the catalog of named forms.

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "matryoshka/exterior.hpp"
#include "matryoshka/gaussian.hpp"
#include "matryoshka/group.hpp"
#include "matryoshka/symmetry.hpp"

namespace matryoshka {

/// Lift of a p-form on R^d to a P-form on R^D: for every Sigma in the group
/// H generated by `generators`,
///   Phi_{Sigma(i1)..Sigma(ip) Sigma(a1)..Sigma(ab)} = eta-signs * phi_{i1..ip},
/// where a1..ab are the appended slots.
struct EmbeddingSpec {
  int source_dim = 0;
  int target_dim = 0;
  int source_deg = 0;
  int target_deg = 0;
  std::vector<int> appended;  // empty means D-b+1..D
  std::vector<SignedPermutation> generators;
  std::size_t bound = kDefaultClosureBound;

  std::vector<int> slots() const {
    if (!appended.empty()) return appended;
    std::vector<int> s;
    for (int k = target_dim - (target_deg - source_deg) + 1; k <= target_dim; ++k) s.push_back(k);
    return s;
  }

  void validate(const Form& phi) const {
    if (phi.dim() != source_dim || phi.degree() != source_deg)
      throw DimensionError("embedding source does not match the form (" + std::to_string(phi.dim()) + ", " +
                           std::to_string(phi.degree()) + ")");
    const int a = target_dim - source_dim;
    const int b = target_deg - source_deg;
    if (a < 0 || b < 0 || b > a) throw DimensionError("embedding requires d <= D, p <= P and P - p <= D - d");
    const auto s = slots();
    if (static_cast<int>(s.size()) != b) throw DimensionError("number of appended slots differs from P - p");
    std::vector<bool> seen(target_dim + 1, false);
    for (int k : s) {
      if (k <= source_dim || k > target_dim) throw DimensionError("appended slot " + std::to_string(k) + " out of range");
      if (seen[k]) throw DimensionError("appended slot repeated");
      seen[k] = true;
    }
    for (const auto& g : generators)
      if (g.dim() != target_dim) throw DimensionError("generator acts on the wrong dimension");
  }
};

inline Form extend(const Form& phi, const EmbeddingSpec& spec) {
  spec.validate(phi);
  const auto slots = spec.slots();
  const Group H = Group::generated_by(spec.target_dim, spec.generators, spec.bound);
  CheckedComponentSet out(spec.target_dim, spec.target_deg);
  std::vector<int> image;
  for (const auto& g : H.elements()) {
    for (const auto& [t, c] : phi.components()) {
      image.clear();
      int sign = 1;
      for (int i : t) {
        image.push_back(g.image(i));
        sign *= g.eta(i);
      }
      for (int a : slots) {
        image.push_back(g.image(a));
        sign *= g.eta(a);
      }
      out.insert(image, sign * c, g.to_string() + " on " + t.to_string());
    }
  }
  return out.form();
}

/// Components of F with the given slots as trailing indices, relabeled onto
/// the remaining indices: the inverse of the appended-slot lift.
inline Form contract_trailing(const Form& F, const std::vector<int>& slots) {
  const int b = static_cast<int>(slots.size());
  if (b > F.degree()) throw DegreeError("more slots than the degree");
  std::vector<int> rest;
  for (int i = 1; i <= F.dim(); ++i)
    if (std::find(slots.begin(), slots.end(), i) == slots.end()) rest.push_back(i);
  std::vector<int> position(F.dim() + 1, 0);
  for (std::size_t k = 0; k < rest.size(); ++k) position[rest[k]] = static_cast<int>(k) + 1;
  Form out(F.dim() - b, F.degree() - b);
  std::vector<int> ordered;
  for (const auto& [t, c] : F.components()) {
    if (!std::all_of(slots.begin(), slots.end(), [&](int s) { return t.contains(s); })) continue;
    ordered.clear();
    std::vector<int> kept;
    for (int i : t)
      if (position[i]) {
        ordered.push_back(i);
        kept.push_back(position[i]);
      }
    ordered.insert(ordered.end(), slots.begin(), slots.end());
    out.set(IndexTuple(std::move(kept)), c * sorting_sign(ordered));
  }
  return out;
}

/// The cyclic shift (1 3 5 ... 2n-1)(2 4 ... 2n) on R^{2n}.
inline SignedPermutation plane_shift(int n) {
  std::string a = "(", b = "(";
  for (int j = 1; j <= n; ++j) {
    a += std::to_string(2 * j - 1) + (j < n ? " " : ")");
    b += std::to_string(2 * j) + (j < n ? " " : ")");
  }
  return SignedPermutation::parse(2 * n, a + b);
}

/// Z_5 lift of an 8-dimensional 4-form to a 10-dimensional 6-form.
inline EmbeddingSpec z5_spec() {
  return {8, 10, 4, 6, {9, 10}, {plane_shift(5)}};
}

/// Z_6 lift of a 10-dimensional 6-form to a 12-dimensional 8-form.
inline EmbeddingSpec z6_spec() {
  return {10, 12, 6, 8, {11, 12}, {plane_shift(6)}};
}

// ---------------------------------------------------------------------------
// Basic catalog forms

inline Form epsilon(int d) {
  Form f(d, d);
  f.set(iota_tuple(d), 1);
  return f;
}

/// omega_12 = omega_34 = ... = 1 on R^{2n}.
inline Form kahler(int n) {
  Form f(2 * n, 2);
  for (int j = 1; j <= n; ++j) f.set(IndexTuple{2 * j - 1, 2 * j}, 1);
  return f;
}

/// Octonionic structure constants.
inline Form g2() {
  return Form::from_entries(7, 3, {{{1, 2, 7}, 1}, {{1, 6, 3}, 1}, {{1, 5, 4}, 1}, {{2, 5, 3}, 1},
                                   {{2, 4, 6}, 1}, {{3, 4, 7}, 1}, {{5, 6, 7}, 1}});
}

/// Spin(7)-invariant self-dual 4-form on R^8.
inline Form spin7() {
  return Form::from_entries(8, 4, {{{1, 2, 3, 4}, 1}, {{1, 2, 5, 6}, 1}, {{1, 2, 7, 8}, 1}, {{1, 3, 5, 7}, 1},
                                   {{1, 3, 8, 6}, 1}, {{1, 4, 8, 5}, 1}, {{1, 4, 7, 6}, 1}, {{2, 3, 8, 5}, 1},
                                   {{2, 3, 7, 6}, 1}, {{2, 4, 7, 5}, 1}, {{2, 4, 6, 8}, 1}, {{3, 4, 5, 6}, 1},
                                   {{3, 4, 7, 8}, 1}, {{5, 6, 7, 8}, 1}});
}

/// The 17-component 4-form on the complement of the {1,10} plane, as listed.
inline Form t17() {
  return Form::from_entries(8, 4, {{{1, 2, 5, 6}, 1},  {{1, 6, 7, 8}, -1}, {{2, 3, 5, 6}, -1}, {{1, 3, 5, 7}, -1},
                                   {{3, 4, 6, 7}, -1}, {{1, 4, 5, 8}, -1}, {{2, 4, 5, 7}, 1},  {{2, 3, 4, 7}, -1},
                                   {{1, 2, 4, 7}, 1},  {{2, 5, 6, 7}, -1}, {{3, 5, 6, 8}, 1},  {{1, 2, 3, 8}, -1},
                                   {{2, 5, 7, 8}, 1},  {{3, 4, 5, 6}, 1},  {{2, 4, 6, 8}, -1}, {{3, 4, 7, 8}, 1},
                                   {{1, 3, 4, 6}, 1}});
}

/// The 6-form on R^10 obtained from spin7() by the Z_5 lift.
inline Form build_omega10() { return extend(spin7(), z5_spec()); }

// ---------------------------------------------------------------------------
// Complex-coordinate forms

using ComplexVector = std::map<int, Gaussian>;
using ComplexMultivector = std::map<IndexTuple, Gaussian>;

/// z_j = e_{2j-1} + i e_{2j}.
inline ComplexVector z_vec(int j) { return {{2 * j - 1, Gaussian(1)}, {2 * j, Gaussian(0, 1)}}; }
inline ComplexVector zbar_vec(int j) { return {{2 * j - 1, Gaussian(1)}, {2 * j, Gaussian(0, -1)}}; }

inline ComplexVector operator+(ComplexVector a, const ComplexVector& b) {
  for (const auto& [k, v] : b) a[k] += v;
  return a;
}

inline ComplexMultivector complex_wedge(const std::vector<ComplexVector>& vectors) {
  ComplexMultivector acc{{IndexTuple{}, Gaussian(1)}};
  for (const auto& v : vectors) {
    ComplexMultivector next;
    std::vector<int> seq;
    for (const auto& [t, c] : acc) {
      for (const auto& [i, a] : v) {
        if (a.is_zero() || t.contains(i)) continue;
        seq.assign(t.begin(), t.end());
        seq.push_back(i);
        auto n = normalize_component(seq, 1);
        next[n->first] += (n->second > 0 ? c * a : -(c * a));
      }
    }
    acc.clear();
    for (auto& [t, c] : next)
      if (!c.is_zero()) acc.emplace(t, std::move(c));
  }
  return acc;
}

/// Phi_{m..q} = eps_{m..q A} V^A summed over sorted multi-indices A.
inline std::map<IndexTuple, Gaussian> epsilon_contract(int D, const ComplexMultivector& V) {
  std::map<IndexTuple, Gaussian> out;
  std::vector<int> seq;
  for (const auto& [t, c] : V) {
    std::vector<int> comp;
    for (int i = 1; i <= D; ++i)
      if (!t.contains(i)) comp.push_back(i);
    seq = comp;
    seq.insert(seq.end(), t.begin(), t.end());
    const int s = sorting_sign(seq);
    out[IndexTuple(comp)] += (s > 0 ? c : -c);
  }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

inline void accumulate(std::map<IndexTuple, Gaussian>& acc, const std::map<IndexTuple, Gaussian>& x) {
  for (const auto& [t, c] : x) acc[t] += c;
  std::erase_if(acc, [](const auto& kv) { return kv.second.is_zero(); });
}

enum class ComplexPart { real, imaginary, nonvanishing };

/// raw = scale * form, with form special and its first component +1.
struct ComplexExpansion {
  Form form;
  mpz_class scale;
};

enum class SignRule {
  /// Make the first component (in tuple order) +1.
  first_positive,
  /// Divide by the positive content only, keeping the sign of the expression.
  literal,
};

/// Divides by the content and fixes the overall sign.
inline ComplexExpansion normalize_special(const Form& raw, SignRule rule = SignRule::first_positive) {
  if (raw.is_zero()) throw NormalizationError("expansion vanished");
  mpz_class g = 0;
  for (const auto& [t, c] : raw.components()) g = gcd(g, c);
  const bool flip = rule == SignRule::first_positive && raw.components().begin()->second < 0;
  const mpz_class scale = flip ? mpz_class(-g) : g;
  Form out(raw.dim(), raw.degree());
  for (const auto& [t, c] : raw.components()) {
    const mpz_class v = c / scale;
    if (abs(v) != 1)
      throw NormalizationError("component " + t.to_string() + " has magnitude " + mpz_class(abs(c)).get_str() +
                               ", content is " + g.get_str());
    out.set(t, v);
  }
  return {out, scale};
}

inline Form take_part(int D, int p, const std::map<IndexTuple, Gaussian>& x, ComplexPart part) {
  bool any_re = false, any_im = false;
  for (const auto& [t, c] : x) {
    any_re |= c.re != 0;
    any_im |= c.im != 0;
  }
  if (part == ComplexPart::nonvanishing) {
    if (any_re && any_im) throw NormalizationError("expansion has both real and imaginary parts");
    part = any_im ? ComplexPart::imaginary : ComplexPart::real;
  }
  Form out(D, p);
  for (const auto& [t, c] : x) out.set(t, part == ComplexPart::real ? c.re : c.im);
  return out;
}

enum class ComplexPattern { A, B, C, D };

inline ComplexPattern parse_pattern(const std::string& s) {
  if (s == "A") return ComplexPattern::A;
  if (s == "B") return ComplexPattern::B;
  if (s == "C") return ComplexPattern::C;
  if (s == "D") return ComplexPattern::D;
  throw CatalogError("unknown complex pattern '" + s + "'");
}

/// The four SU(4) x U(1)-invariant 4-forms on R^10 in the complex frame
/// z_j = e_{2j-1} + i e_{2j}.
///  A: sum over triples i<j<k of eps(z_i zb_i z_j zb_j z_k zb_k).
///  B: for every pair of planes i<j, with a<b<c the remaining planes,
///     eps(z_i zb_i z_j zb_j (z_a zb_b + z_b zb_c + z_c zb_a)); imaginary part.
///  C, D: imaginary and real parts of eps(zb_1 ... zb_5 (z_1 + ... + z_5)).
inline ComplexExpansion complex_expand(ComplexPattern pattern) {
  constexpr int D = 10;
  std::map<IndexTuple, Gaussian> acc;
  ComplexPart part = ComplexPart::nonvanishing;
  switch (pattern) {
    case ComplexPattern::A:
      for (int i = 1; i <= 5; ++i)
        for (int j = i + 1; j <= 5; ++j)
          for (int k = j + 1; k <= 5; ++k)
            accumulate(acc, epsilon_contract(D, complex_wedge({z_vec(i), zbar_vec(i), z_vec(j), zbar_vec(j),
                                                               z_vec(k), zbar_vec(k)})));
      break;
    case ComplexPattern::B:
      for (int i = 1; i <= 5; ++i)
        for (int j = i + 1; j <= 5; ++j) {
          std::vector<int> r;
          for (int k = 1; k <= 5; ++k)
            if (k != i && k != j) r.push_back(k);
          const std::pair<int, int> mixed[3] = {{r[0], r[1]}, {r[1], r[2]}, {r[2], r[0]}};
          for (const auto& [u, v] : mixed)
            accumulate(acc, epsilon_contract(D, complex_wedge({z_vec(i), zbar_vec(i), z_vec(j), zbar_vec(j),
                                                               z_vec(u), zbar_vec(v)})));
        }
      part = ComplexPart::imaginary;
      break;
    case ComplexPattern::C:
    case ComplexPattern::D: {
      ComplexVector sum;
      for (int j = 1; j <= 5; ++j) sum = sum + z_vec(j);
      accumulate(acc, epsilon_contract(D, complex_wedge({zbar_vec(1), zbar_vec(2), zbar_vec(3), zbar_vec(4),
                                                         zbar_vec(5), sum})));
      part = pattern == ComplexPattern::C ? ComplexPart::imaginary : ComplexPart::real;
      break;
    }
  }
  return normalize_special(take_part(D, 4, acc, part));
}

/// SU(4) x U(1)-invariant 4-form on R^8: sum over i<j<=4 of eps(z_i zb_i z_j zb_j).
/// Each term is -4 times a pair of coordinate planes, and the sign of the
/// expression is kept, so all six components are -1.
inline Form su4u1_8d() {
  std::map<IndexTuple, Gaussian> acc;
  for (int i = 1; i <= 4; ++i)
    for (int j = i + 1; j <= 4; ++j)
      accumulate(acc, epsilon_contract(8, complex_wedge({z_vec(i), zbar_vec(i), z_vec(j), zbar_vec(j)})));
  return normalize_special(take_part(8, 4, acc, ComplexPart::nonvanishing), SignRule::literal).form;
}

inline Form phiA() { return complex_expand(ComplexPattern::A).form; }
inline Form phiB() { return complex_expand(ComplexPattern::B).form; }
inline Form phiC() { return complex_expand(ComplexPattern::C).form; }
inline Form phiD() { return complex_expand(ComplexPattern::D).form; }

/// Orientation used for the ten- and twelve-dimensional duals below.
inline constexpr Orientation kHighDimOrientation = Orientation::zero_first;

inline Form omega_dual(ComplexPattern p) { return hodge_star(complex_expand(p).form, kHighDimOrientation); }

/// Embeds a form on R^d into R^D without relabeling.
inline Form embed(const Form& f, int D) {
  if (D < f.dim()) throw DimensionError("embed: target dimension too small");
  Form out(D, f.degree());
  for (const auto& [t, c] : f.components()) out.set(t, c);
  return out;
}

/// Z_6-invariant 8-form on R^12 built from a 6-form on R^10.
inline Form build_psi12(const Form& omega) {
  if (omega.dim() != 10 || omega.degree() != 6) throw DimensionError("build_psi12 expects a 6-form on R^10");
  return extend(omega, z6_spec());
}

// ---------------------------------------------------------------------------
// Catalog by name

inline const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names = {
      "epsilon2", "epsilon4", "kahler2", "kahler3", "g2",     "spin7",  "su4u1_8d", "omega10", "t17",
      "phiA",     "phiB",     "phiC",    "phiD",    "omegaA", "omegaB", "omegaC",   "omegaD",  "psi12A",
      "psi12B"};
  return names;
}

/// Looks up a named form. Besides catalog_names(), "epsilon<d>" and
/// "kahler<n>" are accepted for any size.
inline Form catalog(const std::string& name) {
  auto numeric_suffix = [&](const std::string& prefix) -> std::optional<int> {
    if (name.rfind(prefix, 0) != 0 || name.size() == prefix.size()) return std::nullopt;
    const std::string rest = name.substr(prefix.size());
    if (rest.find_first_not_of("0123456789") != std::string::npos || rest.size() > 2) return std::nullopt;
    return std::stoi(rest);
  };
  if (auto d = numeric_suffix("epsilon"); d && *d >= 1) return epsilon(*d);
  if (auto n = numeric_suffix("kahler"); n && *n >= 1) return kahler(*n);
  static const std::map<std::string, std::function<Form()>> table = {
      {"g2", g2},
      {"spin7", spin7},
      {"su4u1_8d", su4u1_8d},
      {"omega10", build_omega10},
      {"t17", t17},
      {"phiA", phiA},
      {"phiB", phiB},
      {"phiC", phiC},
      {"phiD", phiD},
      {"omegaA", [] { return omega_dual(ComplexPattern::A); }},
      {"omegaB", [] { return omega_dual(ComplexPattern::B); }},
      {"omegaC", [] { return omega_dual(ComplexPattern::C); }},
      {"omegaD", [] { return omega_dual(ComplexPattern::D); }},
      {"psi12A", [] { return build_psi12(omega_dual(ComplexPattern::A)); }},
      {"psi12B", [] { return build_psi12(omega_dual(ComplexPattern::B)); }},
  };
  auto it = table.find(name);
  if (it == table.end()) throw CatalogError("unknown catalog form '" + name + "'");
  return it->second();
}

}  // namespace matryoshka
