#pragma once

// Discrete symmetries of forms under S_d x| Z_2^d: permutation and orthogonal
// censuses, democracy, stability groups, presentations and canonical orbit
// representatives.

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "matryoshka/group.hpp"
#include "matryoshka/signed_permutation.hpp"

namespace matryoshka {

struct CensusOptions {
  bool orthogonal = true;
  /// Orthogonal symmetry sets larger than this are counted but not stored.
  std::size_t max_group_order = env_bound("MATRYOSHKA_MAX_GROUP_ORDER", std::size_t{1} << 17);
  /// Cap on support-preserving permutations visited.
  std::size_t max_support_automorphisms = 10'000'000;
};

struct SymmetryCensus {
  int dim = 0;
  std::size_t support_automorphisms = 0;
  Group perm_symmetries;
  std::vector<std::uint64_t> perm_antisymmetries;  // sorted codes
  bool orthogonal_computed = false;
  bool orthogonal_stored = false;
  std::size_t orth_symmetry_count = 0;
  std::size_t orth_antisymmetry_count = 0;
  Group orth_symmetries;                            // when stored
  std::vector<std::uint64_t> orth_antisymmetries;   // when stored

  /// Symmetries together with antisymmetries.
  Group perm_bisymmetries() const {
    std::vector<std::uint64_t> all = perm_symmetries.codes();
    all.insert(all.end(), perm_antisymmetries.begin(), perm_antisymmetries.end());
    return Group(dim, std::move(all));
  }

  Group orth_bisymmetries() const {
    require_stored();
    std::vector<std::uint64_t> all = orth_symmetries.codes();
    all.insert(all.end(), orth_antisymmetries.begin(), orth_antisymmetries.end());
    return Group(dim, std::move(all));
  }

  void require_stored() const {
    if (!orthogonal_stored)
      throw SearchBoundError("orthogonal symmetry set was not stored (raise the max group order)");
  }
};

namespace detail {

/// Support masks and coefficients of a form, with lookup tables used by the
/// searches below.
struct SupportData {
  int d = 0;
  int p = 0;
  std::vector<std::uint32_t> masks;
  std::vector<mpz_class> coeffs;
  std::vector<std::int32_t> lookup;  // mask -> support index or -1
  std::vector<int> degree;           // incidence degree of each index
  std::vector<std::vector<int>> co;  // pair co-occurrence counts

  explicit SupportData(const Form& f) : d(f.dim()), p(f.degree()) {
    if (d > kMaxCodeDim)
      throw SearchBoundError("symmetry search supports dimension <= " + std::to_string(kMaxCodeDim));
    lookup.assign(std::size_t{1} << d, -1);
    degree.assign(d, 0);
    co.assign(d, std::vector<int>(d, 0));
    for (const auto& [t, c] : f.components()) {
      const auto m = static_cast<std::uint32_t>(t.mask());
      lookup[m] = static_cast<std::int32_t>(masks.size());
      masks.push_back(m);
      coeffs.push_back(c);
      for (int i : t) {
        ++degree[i - 1];
        for (int j : t) co[i - 1][j - 1] += (i != j);
      }
    }
  }

  /// For sigma given as 0-based images: the ratio (sigma f)_s / f_s for each
  /// support, or nullopt if some ratio is not +1 or -1.
  std::optional<std::vector<int>> ratios(const std::array<int, kMaxPermDim>& img) const {
    std::vector<int> r(masks.size());
    std::vector<int> seq;
    for (std::size_t k = 0; k < masks.size(); ++k) {
      seq.clear();
      std::uint32_t image = 0;
      for (int i = 0; i < d; ++i)
        if ((masks[k] >> i) & 1u) {
          seq.push_back(img[i]);
          image |= 1u << img[i];
        }
      const auto idx = lookup[image];
      if (idx < 0) return std::nullopt;
      const mpz_class& target = coeffs[idx];
      const int sgn = sorting_sign(seq);
      if (target == coeffs[k])
        r[k] = sgn;
      else if (target == -coeffs[k])
        r[k] = -sgn;
      else
        return std::nullopt;
    }
    return r;
  }
};

/// Solutions x in GF(2)^d (bit i = eta_{i+1} negative) of x . s = rhs_s for
/// all rows s, written as a particular solution plus kernel basis.
struct Gf2System {
  int d = 0;
  std::vector<std::uint32_t> kernel;  // basis of {x : x . s = 0 for all s}

  Gf2System(int dim, const std::vector<std::uint32_t>& rows) : d(dim) {
    // Reduced row echelon form of the support matrix.
    std::vector<std::uint32_t> basis;
    std::vector<int> pivots;
    reduce(rows, basis, pivots);
    std::vector<bool> is_pivot(d, false);
    for (int pc : pivots) is_pivot[pc] = true;
    for (int free = 0; free < d; ++free) {
      if (is_pivot[free]) continue;
      std::uint32_t x = 1u << free;
      for (std::size_t r = 0; r < basis.size(); ++r)
        if ((basis[r] >> free) & 1u) x |= 1u << pivots[r];
      kernel.push_back(x);
    }
  }

  /// Particular solution, or nullopt when the system is inconsistent.
  static std::optional<std::uint32_t> solve(int d, const std::vector<std::uint32_t>& rows,
                                            const std::vector<int>& rhs) {
    std::vector<std::uint64_t> aug(rows.size());
    for (std::size_t k = 0; k < rows.size(); ++k) aug[k] = rows[k] | (std::uint64_t(rhs[k] & 1) << d);
    std::vector<int> pivots;
    std::size_t r = 0;
    for (int c = 0; c < d && r < aug.size(); ++c) {
      std::size_t sel = r;
      while (sel < aug.size() && !((aug[sel] >> c) & 1u)) ++sel;
      if (sel == aug.size()) continue;
      std::swap(aug[r], aug[sel]);
      for (std::size_t k = 0; k < aug.size(); ++k)
        if (k != r && ((aug[k] >> c) & 1u)) aug[k] ^= aug[r];
      pivots.push_back(c);
      ++r;
    }
    for (std::size_t k = r; k < aug.size(); ++k)
      if ((aug[k] >> d) & 1u) return std::nullopt;
    std::uint32_t x = 0;
    for (std::size_t k = 0; k < pivots.size(); ++k)
      if ((aug[k] >> d) & 1u) x |= 1u << pivots[k];
    return x;
  }

 private:
  void reduce(const std::vector<std::uint32_t>& rows, std::vector<std::uint32_t>& basis, std::vector<int>& pivots) {
    std::vector<std::uint32_t> m = rows;
    std::size_t r = 0;
    for (int c = 0; c < d && r < m.size(); ++c) {
      std::size_t sel = r;
      while (sel < m.size() && !((m[sel] >> c) & 1u)) ++sel;
      if (sel == m.size()) continue;
      std::swap(m[r], m[sel]);
      for (std::size_t k = 0; k < m.size(); ++k)
        if (k != r && ((m[k] >> c) & 1u)) m[k] ^= m[r];
      pivots.push_back(c);
      ++r;
    }
    basis.assign(m.begin(), m.begin() + static_cast<std::ptrdiff_t>(r));
  }
};

/// Depth-first enumeration of the permutations preserving the support set,
/// pruned by incidence degrees, pair co-occurrences and completed supports.
inline void for_each_support_automorphism(const SupportData& sd, std::size_t bound,
                                          const std::function<void(const std::array<int, kMaxPermDim>&)>& visit) {
  const int d = sd.d;
  std::vector<int> order(d);
  for (int i = 0; i < d; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return sd.degree[a] > sd.degree[b]; });
  std::vector<int> position(d);
  for (int t = 0; t < d; ++t) position[order[t]] = t;
  // Supports whose last index in search order sits at position t.
  std::vector<std::vector<std::uint32_t>> completes(d);
  for (auto m : sd.masks) {
    int last = -1;
    for (int i = 0; i < d; ++i)
      if ((m >> i) & 1u) last = std::max(last, position[i]);
    if (last >= 0) completes[last].push_back(m);
  }

  std::array<int, kMaxPermDim> img{};
  std::vector<bool> used(d, false);
  std::size_t visited = 0;
  std::function<void(int)> rec = [&](int t) {
    if (t == d) {
      if (++visited > bound)
        throw SearchBoundError("more than " + std::to_string(bound) + " support-preserving permutations");
      visit(img);
      return;
    }
    const int i = order[t];
    for (int v = 0; v < d; ++v) {
      if (used[v] || sd.degree[v] != sd.degree[i]) continue;
      bool ok = true;
      for (int u = 0; u < t && ok; ++u) {
        const int j = order[u];
        ok = sd.co[i][j] == sd.co[v][img[j]];
      }
      if (!ok) continue;
      img[i] = v;
      for (auto m : completes[t]) {
        std::uint32_t image = 0;
        for (int k = 0; k < d; ++k)
          if ((m >> k) & 1u) image |= 1u << img[k];
        if (sd.lookup[image] < 0) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      used[v] = true;
      rec(t + 1);
      used[v] = false;
    }
  };
  rec(0);
}

inline std::uint64_t encode(int d, const std::array<int, kMaxPermDim>& img, std::uint32_t neg) {
  std::uint64_t c = 0;
  for (int i = 0; i < d; ++i) c |= std::uint64_t(img[i] | (((neg >> i) & 1u) << 4)) << (5 * i);
  return c;
}

}  // namespace detail

/// Permutation census, plus the orthogonal census when requested.
inline SymmetryCensus compute_census(const Form& f, const CensusOptions& opts = {}) {
  const detail::SupportData sd(f);
  const int d = sd.d;
  SymmetryCensus census;
  census.dim = d;
  census.orthogonal_computed = opts.orthogonal;
  const detail::Gf2System system(d, sd.masks);
  const std::size_t kernel_size = std::size_t{1} << system.kernel.size();
  std::vector<std::uint64_t> perm_sym, perm_anti, orth_sym, orth_anti;
  bool store = opts.orthogonal;

  auto add_coset = [&](std::vector<std::uint64_t>& out, const std::array<int, kMaxPermDim>& img, std::uint32_t x0) {
    if (!store) return;
    for (std::size_t k = 0; k < kernel_size; ++k) {
      std::uint32_t x = x0;
      for (std::size_t b = 0; b < system.kernel.size(); ++b)
        if ((k >> b) & 1u) x ^= system.kernel[b];
      out.push_back(detail::encode(d, img, x));
    }
  };

  detail::for_each_support_automorphism(sd, opts.max_support_automorphisms, [&](const std::array<int, kMaxPermDim>& img) {
    ++census.support_automorphisms;
    const auto r = sd.ratios(img);
    if (!r) return;
    const bool all_plus = std::all_of(r->begin(), r->end(), [](int v) { return v == 1; });
    const bool all_minus = !r->empty() && std::all_of(r->begin(), r->end(), [](int v) { return v == -1; });
    if (all_plus) perm_sym.push_back(detail::encode(d, img, 0));
    if (all_minus) perm_anti.push_back(detail::encode(d, img, 0));
    if (!opts.orthogonal) return;
    for (int kappa : {1, -1}) {
      if (kappa == -1 && f.is_zero()) continue;
      std::vector<int> rhs(r->size());
      for (std::size_t k = 0; k < r->size(); ++k) rhs[k] = ((*r)[k] * kappa == -1) ? 1 : 0;
      const auto x0 = detail::Gf2System::solve(d, sd.masks, rhs);
      if (!x0) continue;
      (kappa == 1 ? census.orth_symmetry_count : census.orth_antisymmetry_count) += kernel_size;
      if (store && census.orth_symmetry_count + census.orth_antisymmetry_count > opts.max_group_order) {
        store = false;
        orth_sym.clear();
        orth_anti.clear();
      }
      add_coset(kappa == 1 ? orth_sym : orth_anti, img, *x0);
    }
  });

  census.perm_symmetries = Group(d, std::move(perm_sym));
  std::sort(perm_anti.begin(), perm_anti.end());
  census.perm_antisymmetries = std::move(perm_anti);
  if (opts.orthogonal && store) {
    census.orthogonal_stored = true;
    census.orth_symmetries = Group(d, std::move(orth_sym));
    std::sort(orth_anti.begin(), orth_anti.end());
    census.orth_antisymmetries = std::move(orth_anti);
  }
  return census;
}

inline SymmetryCensus enumerate_permutation_census(const Form& f, const CensusOptions& opts = {}) {
  CensusOptions o = opts;
  o.orthogonal = false;
  return compute_census(f, o);
}

inline SymmetryCensus enumerate_orthogonal_census(const Form& f, const CensusOptions& opts = {}) {
  CensusOptions o = opts;
  o.orthogonal = true;
  return compute_census(f, o);
}

/// Exhaustive census over every element of S_d x| Z_2^d; an oracle for
/// small dimensions.
inline SymmetryCensus brute_force_census(const Form& f) {
  const int d = f.dim();
  if (d > 6) throw SearchBoundError("brute force census is limited to dimension <= 6");
  SymmetryCensus census;
  census.dim = d;
  census.orthogonal_computed = census.orthogonal_stored = true;
  std::vector<int> images(d);
  for (int i = 0; i < d; ++i) images[i] = i + 1;
  std::vector<std::uint64_t> ps, pa, os, oa;
  const Form neg = negate(f);
  do {
    for (std::uint32_t mask = 0; mask < (1u << d); ++mask) {
      std::vector<int> eta(d);
      for (int i = 0; i < d; ++i) eta[i] = (mask >> i) & 1u ? -1 : 1;
      const auto g = SignedPermutation::from_images(images, eta);
      const Form image = act(g, f);
      if (image == f) {
        os.push_back(g.code());
        if (mask == 0) ps.push_back(g.code());
      } else if (image == neg) {
        oa.push_back(g.code());
        if (mask == 0) pa.push_back(g.code());
      }
    }
  } while (std::next_permutation(images.begin(), images.end()));
  census.orth_symmetry_count = os.size();
  census.orth_antisymmetry_count = oa.size();
  census.perm_symmetries = Group(d, std::move(ps));
  std::sort(pa.begin(), pa.end());
  census.perm_antisymmetries = std::move(pa);
  census.orth_symmetries = Group(d, std::move(os));
  std::sort(oa.begin(), oa.end());
  census.orth_antisymmetries = std::move(oa);
  return census;
}

/// Least element of a code set under (images, then negation mask) order.
inline std::optional<SignedPermutation> lexicographically_least(int d, const std::vector<std::uint64_t>& codes) {
  std::optional<SignedPermutation> best;
  auto key = [d](const SignedPermutation& g) {
    std::vector<int> k;
    for (int i = 1; i <= d; ++i) k.push_back(g.image(i));
    for (int i = 1; i <= d; ++i) k.push_back(g.eta(i) < 0);
    return k;
  };
  for (auto c : codes) {
    auto g = SignedPermutation::from_code(d, c);
    if (!best || key(g) < key(*best)) best = g;
  }
  return best;
}

struct DemocracyReport {
  bool democratic = false;
  /// "symmetries" when G_r alone is transitive, "bisymmetries" when the
  /// union with the antisymmetries is needed, empty otherwise.
  std::string achieved_by;
};

inline DemocracyReport democracy(const SymmetryCensus& census) {
  if (census.perm_symmetries.is_transitive()) return {true, "symmetries"};
  if (census.perm_bisymmetries().is_transitive()) return {true, "bisymmetries"};
  return {false, ""};
}

inline bool is_democratic(const SymmetryCensus& census) { return democracy(census).democratic; }
inline bool is_democratic(const Form& f) { return is_democratic(enumerate_permutation_census(f)); }

/// Transitivity of the orthogonal bisymmetry group (underlying permutations).
/// Needs the stored orthogonal sets.
inline bool is_orthogonally_democratic(const SymmetryCensus& census) {
  return census.orth_bisymmetries().is_transitive();
}

/// Permutation symmetries fixing every support set with an even induced
/// permutation on it.
inline Group stability_group(const Form& f, const SymmetryCensus& census) {
  std::vector<std::vector<int>> supports;
  for (const auto& [t, c] : f.components()) supports.push_back(t.indices());
  return census.perm_symmetries.filter([&](const SignedPermutation& g) {
    std::vector<int> seq;
    for (const auto& s : supports) {
      seq.clear();
      for (int i : s) {
        const int v = g.image(i);
        if (!std::binary_search(s.begin(), s.end(), v)) return false;
        seq.push_back(v);
      }
      if (sorting_sign(seq) != 1) return false;
    }
    return true;
  });
}

inline Group stability_group(const Form& f) { return stability_group(f, enumerate_permutation_census(f)); }

// ---------------------------------------------------------------------------
// Presentations

/// Accumulates signed components, refusing two different values on the same
/// support.
class CheckedComponentSet {
 public:
  CheckedComponentSet(int dim, int degree) : form_(dim, degree) {}

  template <class ErrorType = IncompatibleEmbeddingError>
  void insert(std::span<const int> ordered, const mpz_class& value, const std::string& provenance) {
    auto n = normalize_component(ordered, value);
    if (!n) throw ErrorType("repeated index in generated component (" + provenance + ")");
    auto it = seen_.find(n->first);
    if (it == seen_.end()) {
      seen_.emplace(n->first, std::make_pair(n->second, provenance));
      form_.set(n->first, n->second);
    } else if (it->second.first != n->second) {
      throw ErrorType("sign conflict on component " + n->first.to_string() + ": " + it->second.second +
                      " gives " + it->second.first.get_str() + ", " + provenance + " gives " + n->second.get_str());
    }
  }

  const Form& form() const { return form_; }

 private:
  Form form_;
  std::map<IndexTuple, std::pair<mpz_class, std::string>> seen_;
};

struct SeedComponent {
  std::vector<int> indices;  // ordered
  int sign = 1;
};

/// Orbit of the seed components under the group generated by `generators`.
/// Throws IncompatiblePresentationError if two group elements disagree.
inline Form expand_presentation(int dim, const std::vector<SeedComponent>& seeds,
                                const std::vector<SignedPermutation>& generators,
                                std::size_t bound = kDefaultClosureBound) {
  if (seeds.empty()) throw DegreeError("presentation needs at least one seed");
  const int p = static_cast<int>(seeds.front().indices.size());
  const Group G = Group::generated_by(dim, generators, bound);
  CheckedComponentSet out(dim, p);
  std::vector<int> image;
  for (const auto& g : G.elements()) {
    for (const auto& s : seeds) {
      if (static_cast<int>(s.indices.size()) != p) throw DegreeError("seeds of different degree");
      // Pushforward of the seed by g.
      image.clear();
      int sign = s.sign;
      for (int i : s.indices) {
        image.push_back(g.image(i));
        sign *= g.eta(i);
      }
      out.insert<IncompatiblePresentationError>(image, sign, g.to_string() + " on seed " + IndexTuple(std::vector<int>(s.indices)).to_string());
    }
  }
  return out.form();
}

// ---------------------------------------------------------------------------
// Canonical orbit representatives

struct CanonicalOptions {
  std::size_t max_nodes = 20'000'000;
};

namespace detail {

struct CanonicalKey {
  std::vector<std::uint32_t> masks;  // ascending
  std::vector<mpz_class> magnitudes;
  std::vector<std::int8_t> signs;    // +1 or -1

  bool operator<(const CanonicalKey& o) const {
    if (masks != o.masks) return masks < o.masks;
    if (magnitudes != o.magnitudes) return magnitudes < o.magnitudes;
    // +1 sorts before -1.
    for (std::size_t k = 0; k < signs.size(); ++k)
      if (signs[k] != o.signs[k]) return signs[k] > o.signs[k];
    return false;
  }
};

}  // namespace detail

/// Least form in the O(d, Z) orbit of f. Forms are ordered by their support
/// masks (ascending, compared as a list; bit i-1 stands for index i), then
/// by coefficient magnitudes, then by signs with +1 before -1.
inline Form canonical_representative(const Form& f, const CanonicalOptions& opts = {}) {
  const int d = f.dim();
  if (d > 31) throw SearchBoundError("canonical form supports dimension <= 31");
  if (f.is_zero()) return f;
  std::vector<std::uint32_t> masks;
  std::vector<mpz_class> coeffs;
  std::vector<std::vector<int>> tuples;
  std::vector<std::vector<int>> containing(d);
  for (const auto& [t, c] : f.components()) {
    for (int i : t) containing[i - 1].push_back(static_cast<int>(masks.size()));
    masks.push_back(static_cast<std::uint32_t>(t.mask()));
    coeffs.push_back(c);
    tuples.push_back(t.indices());
  }
  const std::size_t n = masks.size();

  std::optional<detail::CanonicalKey> best;
  std::vector<int> label(d, -1);           // old index (0-based) -> new label
  std::vector<int> remaining(n);           // unassigned indices per support
  for (std::size_t k = 0; k < n; ++k) remaining[k] = static_cast<int>(tuples[k].size());
  std::vector<std::uint32_t> prefix;       // completed new masks, ascending
  std::size_t nodes = 0;

  auto new_mask = [&](std::size_t k) {
    std::uint32_t m = 0;
    for (int i : tuples[k]) m |= 1u << label[i - 1];
    return m;
  };

  auto finish_leaf = [&] {
    // Supports in ascending new-mask order with their relabeled values.
    std::vector<std::pair<std::uint32_t, mpz_class>> rows;
    rows.reserve(n);
    std::vector<int> seq;
    for (std::size_t k = 0; k < n; ++k) {
      seq.clear();
      for (int i : tuples[k]) seq.push_back(label[i - 1]);
      rows.emplace_back(new_mask(k), sorting_sign(seq) * coeffs[k]);
    }
    std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    detail::CanonicalKey key;
    for (const auto& [m, v] : rows) {
      key.masks.push_back(m);
      key.magnitudes.push_back(abs(v));
    }
    if (best && best->masks == key.masks && best->magnitudes < key.magnitudes) return;
    // Greedy sign choice over GF(2): make each component +1 when the earlier
    // choices allow it.
    std::vector<std::uint64_t> basis;  // rows (mask | rhs << 32) in echelon form by pivot
    std::vector<int> pivot;
    for (const auto& [m, v] : rows) {
      std::uint64_t want = std::uint64_t(m) | (std::uint64_t(v < 0 ? 1 : 0) << 32);
      std::uint64_t r = want;
      for (std::size_t b = 0; b < basis.size(); ++b)
        if ((r >> pivot[b]) & 1u) r ^= basis[b];
      if ((r & 0xffffffffu) == 0) {
        // Determined by earlier rows: residual rhs bit says the sign is flipped.
        key.signs.push_back((r >> 32) & 1u ? -1 : 1);
      } else {
        int pc = __builtin_ctzll(r & 0xffffffffu);
        for (auto& b : basis)
          if ((b >> pc) & 1u) b ^= r;
        basis.push_back(r);
        pivot.push_back(pc);
        key.signs.push_back(1);
      }
    }
    if (!best || key < *best) best = std::move(key);
  };

  std::function<void(int)> rec = [&](int k) {
    if (++nodes > opts.max_nodes)
      throw SearchBoundError("canonical form search exceeded " + std::to_string(opts.max_nodes) + " nodes");
    if (k == d) {
      finish_leaf();
      return;
    }
    // Candidates for label k, keyed by the masks they complete.
    std::vector<std::pair<std::vector<std::uint32_t>, int>> cands;
    for (int v = 0; v < d; ++v) {
      if (label[v] >= 0) continue;
      std::vector<std::uint32_t> done;
      label[v] = k;
      for (int s : containing[v])
        if (remaining[s] == 1) done.push_back(new_mask(s));
      label[v] = -1;
      std::sort(done.begin(), done.end());
      cands.emplace_back(std::move(done), v);
    }
    // A shorter completed list loses to a longer one sharing its prefix,
    // since every later mask exceeds 2^(k+1).
    auto less = [](const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
      const std::size_t m = std::min(a.size(), b.size());
      for (std::size_t i = 0; i < m; ++i)
        if (a[i] != b[i]) return a[i] < b[i];
      return a.size() > b.size();
    };
    const auto& min_list = std::min_element(cands.begin(), cands.end(), [&](const auto& a, const auto& b) {
                             return less(a.first, b.first);
                           })->first;
    const std::vector<std::uint32_t> target = min_list;
    const std::uint32_t limit = k + 1 >= 32 ? 0xffffffffu : (1u << (k + 1));
    for (const auto& [done, v] : cands) {
      if (done != target) continue;
      if (best) {
        // Compare prefix + done with the best key's masks.
        int cmp = 0;
        const std::size_t len = prefix.size() + done.size();
        for (std::size_t i = 0; i < len && cmp == 0; ++i) {
          const std::uint32_t m = i < prefix.size() ? prefix[i] : done[i - prefix.size()];
          if (m != best->masks[i]) cmp = m < best->masks[i] ? -1 : 1;
        }
        if (cmp > 0) continue;
        // Every later mask is at least 2^(k+1).
        if (cmp == 0 && len < best->masks.size() && best->masks[len] < limit) continue;
      }
      label[v] = k;
      for (int s : containing[v]) --remaining[s];
      prefix.insert(prefix.end(), done.begin(), done.end());
      rec(k + 1);
      prefix.resize(prefix.size() - done.size());
      for (int s : containing[v]) ++remaining[s];
      label[v] = -1;
    }
  };
  rec(0);

  Form out(d, f.degree());
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<int> idx;
    for (int i = 0; i < d; ++i)
      if ((best->masks[k] >> i) & 1u) idx.push_back(i + 1);
    out.set(IndexTuple(std::move(idx)), best->magnitudes[k] * best->signs[k]);
  }
  return out;
}

inline bool orbit_equivalent(const Form& a, const Form& b, const CanonicalOptions& opts = {}) {
  if (a.dim() != b.dim() || a.degree() != b.degree() || a.weight() != b.weight()) return false;
  return canonical_representative(a, opts) == canonical_representative(b, opts);
}

}  // namespace matryoshka
