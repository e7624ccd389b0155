#pragma once

// Elements (sigma, eta_1..eta_d) of the hyperoctahedral group S_d x| Z_2^d.
//
// The action on forms is the pullback
//   (g f)_{i1..ip} = eta_{i1}...eta_{ip} f_{sigma(i1)...sigma(ip)},
// and the product is defined so that act(g * h, f) == act(g, act(h, f)).

#include <algorithm>
#include <array>
#include <cstdint>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "matryoshka/exterior.hpp"

namespace matryoshka {

inline constexpr int kMaxPermDim = 16;
/// Largest dimension whose elements fit a 64-bit packed code.
inline constexpr int kMaxCodeDim = 12;

class SignedPermutation {
 public:
  SignedPermutation() = default;

  static SignedPermutation identity(int d) {
    check_dim(d);
    SignedPermutation g;
    g.d_ = d;
    for (int i = 0; i < d; ++i) g.img_[i] = static_cast<std::uint8_t>(i);
    return g;
  }

  /// `images[i-1]` is sigma(i); `eta` lists eta_1..eta_d (empty means all +1).
  static SignedPermutation from_images(const std::vector<int>& images, const std::vector<int>& eta = {}) {
    const int d = static_cast<int>(images.size());
    SignedPermutation g = identity(d);
    std::vector<bool> seen(d, false);
    for (int i = 0; i < d; ++i) {
      const int v = images[i];
      if (v < 1 || v > d || seen[v - 1]) throw DimensionError("images do not form a permutation");
      seen[v - 1] = true;
      g.img_[i] = static_cast<std::uint8_t>(v - 1);
    }
    if (!eta.empty()) {
      if (static_cast<int>(eta.size()) != d) throw DimensionError("eta length differs from dimension");
      for (int i = 0; i < d; ++i) {
        if (eta[i] != 1 && eta[i] != -1) throw DimensionError("eta entries must be +1 or -1");
        if (eta[i] < 0) g.neg_ |= 1u << i;
      }
    }
    return g;
  }

  /// Parses cycle notation such as "(1 2 5 4 6 7 3)" or "(1 2)(10 3)", where
  /// (a b c) maps a to b, b to c and c to a. An optional trailing "[-2 -5]"
  /// lists the indices carrying eta = -1.
  static SignedPermutation parse(int d, const std::string& text) {
    SignedPermutation g = identity(d);
    std::size_t pos = 0;
    auto skip_ws = [&] {
      while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    };
    auto read_int = [&]() -> int {
      skip_ws();
      std::size_t used = 0;
      int v = std::stoi(text.substr(pos), &used);
      pos += used;
      return v;
    };
    std::vector<bool> moved(d, false);
    skip_ws();
    while (pos < text.size() && text[pos] == '(') {
      ++pos;
      std::vector<int> cycle;
      skip_ws();
      while (pos < text.size() && text[pos] != ')') {
        const int v = read_int();
        if (v < 1 || v > d) throw DimensionError("cycle entry " + std::to_string(v) + " out of range");
        if (moved[v - 1]) throw DimensionError("index " + std::to_string(v) + " repeated in cycles");
        moved[v - 1] = true;
        cycle.push_back(v - 1);
        skip_ws();
      }
      if (pos >= text.size()) throw DimensionError("unterminated cycle in '" + text + "'");
      ++pos;
      for (std::size_t k = 0; k < cycle.size(); ++k)
        g.img_[cycle[k]] = static_cast<std::uint8_t>(cycle[(k + 1) % cycle.size()]);
      skip_ws();
    }
    if (pos < text.size() && text[pos] == '[') {
      ++pos;
      skip_ws();
      while (pos < text.size() && text[pos] != ']') {
        const int v = read_int();
        if (v > -1 || -v > d) throw DimensionError("sign entries are written -i with 1 <= i <= d");
        g.neg_ |= 1u << (-v - 1);
        skip_ws();
      }
      if (pos >= text.size()) throw DimensionError("unterminated sign list in '" + text + "'");
      ++pos;
      skip_ws();
    }
    if (pos != text.size()) throw DimensionError("cannot parse signed permutation '" + text + "'");
    return g;
  }

  static SignedPermutation from_code(int d, std::uint64_t code) {
    SignedPermutation g;
    g.d_ = d;
    for (int i = 0; i < d; ++i) {
      const auto chunk = (code >> (5 * i)) & 31u;
      g.img_[i] = static_cast<std::uint8_t>(chunk & 15u);
      if (chunk & 16u) g.neg_ |= 1u << i;
    }
    return g;
  }

  static SignedPermutation random(int d, std::mt19937_64& rng, bool with_signs = true) {
    SignedPermutation g = identity(d);
    std::vector<std::uint8_t> v(g.img_.begin(), g.img_.begin() + d);
    std::shuffle(v.begin(), v.end(), rng);
    std::copy(v.begin(), v.end(), g.img_.begin());
    if (with_signs) g.neg_ = static_cast<std::uint32_t>(rng()) & ((1u << d) - 1);
    return g;
  }

  int dim() const noexcept { return d_; }
  /// sigma(i), 1-based.
  int image(int i) const { return img_[i - 1] + 1; }
  /// eta_i in {+1, -1}, 1-based.
  int eta(int i) const { return (neg_ >> (i - 1)) & 1u ? -1 : 1; }
  std::uint32_t negation_mask() const noexcept { return neg_; }
  bool is_pure_permutation() const noexcept { return neg_ == 0; }

  /// Packed 5-bit-per-slot encoding; requires dim() <= kMaxCodeDim.
  std::uint64_t code() const {
    if (d_ > kMaxCodeDim) throw SearchBoundError("packed codes need dimension <= 12");
    std::uint64_t c = 0;
    for (int i = 0; i < d_; ++i) {
      std::uint64_t chunk = img_[i] | (((neg_ >> i) & 1u) << 4);
      c |= chunk << (5 * i);
    }
    return c;
  }

  /// pi(sigma) in {+1, -1}.
  int parity() const {
    int sign = 1;
    std::array<bool, kMaxPermDim> seen{};
    for (int i = 0; i < d_; ++i) {
      if (seen[i]) continue;
      int len = 0;
      for (int j = i; !seen[j]; j = img_[j]) {
        seen[j] = true;
        ++len;
      }
      if (len % 2 == 0) sign = -sign;
    }
    return sign;
  }

  /// eta_1...eta_d pi(sigma): +1 exactly for elements of SO(d, Z).
  int determinant() const { return (__builtin_popcount(neg_) % 2 ? -1 : 1) * parity(); }
  bool in_SO() const { return determinant() == 1; }

  SignedPermutation inverse() const {
    SignedPermutation g;
    g.d_ = d_;
    for (int i = 0; i < d_; ++i) {
      g.img_[img_[i]] = static_cast<std::uint8_t>(i);
      if ((neg_ >> i) & 1u) g.neg_ |= 1u << img_[i];
    }
    return g;
  }

  /// act(a * b, f) == act(a, act(b, f)).
  friend SignedPermutation operator*(const SignedPermutation& a, const SignedPermutation& b) {
    if (a.d_ != b.d_) throw DimensionError("product of signed permutations of different dimension");
    SignedPermutation g;
    g.d_ = a.d_;
    for (int i = 0; i < a.d_; ++i) {
      const int mid = a.img_[i];
      g.img_[i] = b.img_[mid];
      if ((((a.neg_ >> i) ^ (b.neg_ >> mid)) & 1u) != 0) g.neg_ |= 1u << i;
    }
    return g;
  }

  int order() const {
    SignedPermutation x = *this;
    const SignedPermutation id = identity(d_);
    int n = 1;
    while (!(x == id)) {
      x = x * *this;
      ++n;
    }
    return n;
  }

  /// Sorted cycle lengths of sigma, e.g. {1, 7}.
  std::vector<int> cycle_type() const {
    std::vector<int> lengths;
    std::array<bool, kMaxPermDim> seen{};
    for (int i = 0; i < d_; ++i) {
      if (seen[i]) continue;
      int len = 0;
      for (int j = i; !seen[j]; j = img_[j]) {
        seen[j] = true;
        ++len;
      }
      lengths.push_back(len);
    }
    std::sort(lengths.begin(), lengths.end());
    return lengths;
  }

  /// Cycle type written as "1^1 7^1".
  std::string cycle_type_string() const {
    const auto lengths = cycle_type();
    std::string out;
    for (std::size_t k = 0; k < lengths.size();) {
      std::size_t e = k;
      while (e < lengths.size() && lengths[e] == lengths[k]) ++e;
      if (!out.empty()) out += ' ';
      out += std::to_string(lengths[k]) + "^" + std::to_string(e - k);
      k = e;
    }
    return out;
  }

  /// Cycle notation without fixed points; "()" for the identity permutation.
  /// Negated slots follow in brackets, e.g. "(1 2) [-1 -3]".
  std::string to_string() const {
    std::string out;
    std::array<bool, kMaxPermDim> seen{};
    for (int i = 0; i < d_; ++i) {
      if (seen[i] || img_[i] == i) continue;
      out += '(';
      for (int j = i; !seen[j]; j = img_[j]) {
        seen[j] = true;
        if (j != i) out += ' ';
        out += std::to_string(j + 1);
      }
      out += ')';
    }
    if (out.empty()) out = "()";
    if (neg_) {
      out += " [";
      bool first = true;
      for (int i = 0; i < d_; ++i)
        if ((neg_ >> i) & 1u) {
          if (!first) out += ' ';
          out += "-" + std::to_string(i + 1);
          first = false;
        }
      out += ']';
    }
    return out;
  }

  friend bool operator==(const SignedPermutation& a, const SignedPermutation& b) {
    if (a.d_ != b.d_ || a.neg_ != b.neg_) return false;
    for (int i = 0; i < a.d_; ++i)
      if (a.img_[i] != b.img_[i]) return false;
    return true;
  }

 private:
  static void check_dim(int d) {
    if (d < 0 || d > kMaxPermDim)
      throw DimensionError("signed permutations support dimension <= " + std::to_string(kMaxPermDim));
  }

  int d_ = 0;
  std::array<std::uint8_t, kMaxPermDim> img_{};
  std::uint32_t neg_ = 0;
};

/// The pullback action (g f)_I = eta_I f_{sigma(I)}.
inline Form act(const SignedPermutation& g, const Form& f) {
  if (g.dim() != f.dim()) throw DimensionError("act: dimension mismatch");
  const SignedPermutation inv = g.inverse();
  Form out(f.dim(), f.degree());
  std::vector<int> pre;
  for (const auto& [t, c] : f.components()) {
    // (g f) at sigma^{-1}(J), taken in the order of J, equals eta_{sigma^{-1}(J)} f_J.
    pre.clear();
    int sign = 1;
    for (int j : t) {
      const int i = inv.image(j);
      pre.push_back(i);
      sign *= g.eta(i);
    }
    out.accumulate(pre, sign * c);
  }
  return out;
}

enum class ElementClass { Symmetry, Antisymmetry, Neither };

inline const char* to_string(ElementClass c) {
  switch (c) {
    case ElementClass::Symmetry: return "Symmetry";
    case ElementClass::Antisymmetry: return "Antisymmetry";
    default: return "Neither";
  }
}

inline ElementClass classify_element(const SignedPermutation& g, const Form& f) {
  const Form image = act(g, f);
  if (image == f) return ElementClass::Symmetry;
  if (image == negate(f)) return ElementClass::Antisymmetry;
  return ElementClass::Neither;
}

}  // namespace matryoshka
