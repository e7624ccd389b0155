#pragma once

// The su(2) acting on the 8-space orthogonal to a non-exceptional plane of the
// 10-dimensional 6-form: exact checks of the algebra, its invariant vectors,
// spinor eigenvectors and the Casimir decomposition of 2-forms.

#include <array>
#include <string>
#include <vector>

#include "matryoshka/construct.hpp"
#include "matryoshka/int_matrix.hpp"
#include "matryoshka/quadratic_field.hpp"
#include "matryoshka/spectral.hpp"

namespace matryoshka {

/// Integer parts A_i of the generators: T_1 = (sqrt3/6) A_1, T_2 = (sqrt3/6) A_2,
/// T_3 = (1/6) A_3.
inline std::array<IntMatrix, 3> su2_integer_parts() {
  using Rows = std::array<std::array<int, 8>, 8>;
  const std::array<Rows, 3> raw = {{
      {{{0, 0, 0, 0, 0, 0, 0, 0},
        {0, 0, 0, 1, 0, -1, 0, 0},
        {0, 0, 0, 0, 1, 0, -1, 0},
        {0, -1, 0, 0, 0, 1, 0, 0},
        {0, 0, -1, 0, 0, 0, 1, 0},
        {0, 1, 0, -1, 0, 0, 0, 0},
        {0, 0, 1, 0, -1, 0, 0, 0},
        {0, 0, 0, 0, 0, 0, 0, 0}}},
      {{{0, 0, 0, 0, 0, 0, 0, 0},
        {0, 0, 0, 0, 1, 0, -1, 0},
        {0, 0, 0, -1, 0, 1, 0, 0},
        {0, 0, 1, 0, -1, 0, 0, 0},
        {0, -1, 0, 1, 0, 0, 0, 0},
        {0, 0, -1, 0, 0, 0, 1, 0},
        {0, 1, 0, 0, 0, -1, 0, 0},
        {0, 0, 0, 0, 0, 0, 0, 0}}},
      {{{0, 0, 0, 0, 0, 0, 0, 0},
        {0, 0, 2, 0, -1, 0, -1, 0},
        {0, -2, 0, 1, 0, 1, 0, 0},
        {0, 0, -1, 0, -1, 0, 2, 0},
        {0, 1, 0, 1, 0, -2, 0, 0},
        {0, 0, -1, 0, 2, 0, -1, 0},
        {0, 1, 0, -2, 0, 1, 0, 0},
        {0, 0, 0, 0, 0, 0, 0, 0}}},
  }};
  std::array<IntMatrix, 3> out;
  for (int m = 0; m < 3; ++m) {
    out[m] = IntMatrix(8, 8);
    for (int i = 0; i < 8; ++i)
      for (int j = 0; j < 8; ++j) out[m](i, j) = raw[m][i][j];
  }
  return out;
}

inline std::array<FieldMatrix<Q3>, 3> su2_generators() {
  const auto A = su2_integer_parts();
  const std::array<Q3, 3> scale = {Q3(mpq_class(0), mpq_class(1, 6)), Q3(mpq_class(0), mpq_class(1, 6)),
                                   Q3(mpq_class(1, 6))};
  std::array<FieldMatrix<Q3>, 3> T = {FieldMatrix<Q3>(8, 8), FieldMatrix<Q3>(8, 8), FieldMatrix<Q3>(8, 8)};
  for (int m = 0; m < 3; ++m)
    for (int i = 0; i < 8; ++i)
      for (int j = 0; j < 8; ++j) T[m](i, j) = scale[m] * Q3(mpq_class(A[m](i, j)));
  return T;
}

/// Induced action X(u ^ v) = Xu ^ v + u ^ Xv on 2-forms, basis e_a ^ e_b
/// (a < b) in lexicographic order.
inline IntMatrix induced_on_two_forms(const IntMatrix& A) {
  const std::size_t n = A.rows();
  std::vector<std::pair<std::size_t, std::size_t>> basis;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) basis.emplace_back(a, b);
  IntMatrix out(basis.size(), basis.size());
  for (std::size_t r = 0; r < basis.size(); ++r) {
    const auto [a, b] = basis[r];
    for (std::size_t c = 0; c < basis.size(); ++c) {
      const auto [x, y] = basis[c];
      mpz_class v = 0;
      if (y == b) v += A(a, x);
      if (y == a) v -= A(b, x);
      if (x == a) v += A(b, y);
      if (x == b) v -= A(a, y);
      out(r, c) = v;
    }
  }
  return out;
}

struct Su2Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct Su2Report {
  std::vector<Su2Check> checks;
  bool all_passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return !checks.empty();
  }
};

namespace detail {

// 36 C = 3 A_1^2 + 3 A_2^2 + A_3^2 for the Casimir C = sum T_i^2.
inline IntMatrix scaled_casimir(const std::array<IntMatrix, 3>& A) {
  return mpz_class(3) * (A[0] * A[0]) + mpz_class(3) * (A[1] * A[1]) + A[2] * A[2];
}

inline std::size_t kernel_dimension_shifted(const IntMatrix& M, long shift) {
  IntMatrix S = M;
  for (std::size_t i = 0; i < S.rows(); ++i) S(i, i) += shift;
  return S.rows() - rank(S);
}

}  // namespace detail

inline Su2Report verify_su2_reduction() {
  Su2Report report;
  auto add = [&](std::string name, bool ok, std::string detail = "") {
    report.checks.push_back({std::move(name), ok, std::move(detail)});
  };
  const auto T = su2_generators();

  // [T_i, T_j] = eps_ijk T_k
  for (int i = 0; i < 3; ++i) {
    const int j = (i + 1) % 3, k = (i + 2) % 3;
    const bool ok = T[i] * T[j] - T[j] * T[i] == T[k];
    add("[T" + std::to_string(i + 1) + ",T" + std::to_string(j + 1) + "] = T" + std::to_string(k + 1), ok);
  }

  const std::array<std::array<int, 8>, 4> invariant = {{{1, 0, 0, 0, 0, 0, 0, 0},
                                                         {0, 0, 0, 0, 0, 0, 0, 1},
                                                         {0, 1, 0, 1, 0, 1, 0, 0},
                                                         {0, 0, 1, 0, 1, 0, 1, 0}}};
  for (std::size_t v = 0; v < invariant.size(); ++v) {
    std::vector<Q3> vec(8);
    for (int i = 0; i < 8; ++i) vec[i] = Q3(invariant[v][i]);
    bool ok = true;
    for (const auto& Ti : T)
      for (const auto& x : Ti.apply(vec)) ok = ok && x.is_zero();
    add("invariant vector " + std::to_string(v + 1), ok);
  }

  // Eigenvectors of T_1 over Q(sqrt3, i).
  const Q3i I = Q3i::root();
  const Q3i s3 = Q3i(Q3::root());
  const Q3i one = Q3i(1), two = Q3i(2), zero = Q3i(0);
  struct Eigen {
    const char* name;
    std::vector<Q3i> v;
    Q3i lambda;
  };
  const Q3i half_i = Q3i(Q3(mpq_class(0)), Q3(mpq_class(1, 2)));
  const std::vector<Eigen> eig = {
      {"b1", {zero, one + s3 * I, zero, one - s3 * I, zero, -two, zero, zero}, -half_i},
      {"b2", {zero, zero, s3 + I, zero, -s3 + I, zero, -two * I, zero}, half_i},
      {"c1", {zero, zero, one + s3 * I, zero, one - s3 * I, zero, -two, zero}, -half_i},
      {"c2", {zero, s3 - I, zero, two * I, zero, -s3 - I, zero, zero}, half_i},
  };
  const auto T1 = T[0].template lift<Q3i>();
  for (const auto& e : eig) {
    const auto image = T1.apply(e.v);
    bool ok = true;
    for (std::size_t i = 0; i < 8; ++i) ok = ok && image[i] == e.lambda * e.v[i];
    add(std::string(e.name) + " eigenvector of T1 with eigenvalue " + (e.lambda == half_i ? "i/2" : "-i/2"), ok);
  }

  // The 17-component 4-form is annihilated by each generator.
  const auto A = su2_integer_parts();
  for (int m = 0; m < 3; ++m) {
    Form image(8, 4);
    for (int a = 1; a <= 8; ++a)
      for (int b = a + 1; b <= 8; ++b)
        if (A[m](a - 1, b - 1) != 0) image = image + scale(rotate_derivation(t17(), a, b), A[m](a - 1, b - 1));
    add("T" + std::to_string(m + 1) + " annihilates the 17-component 4-form", image.is_zero(),
        "image weight " + std::to_string(image.weight()));
  }

  // Casimir eigenvalue -j(j+1) on spin j; scaled by 36.
  const IntMatrix CV = detail::scaled_casimir(A);
  const std::size_t v0 = detail::kernel_dimension_shifted(CV, 0);
  const std::size_t vhalf = detail::kernel_dimension_shifted(CV, 27);
  add("8 = 4[0] + 2[1/2]", v0 == 4 && vhalf == 4,
      "spin 0 states " + std::to_string(v0) + ", spin 1/2 states " + std::to_string(vhalf));

  const std::array<IntMatrix, 3> A2 = {induced_on_two_forms(A[0]), induced_on_two_forms(A[1]),
                                       induced_on_two_forms(A[2])};
  const IntMatrix C2 = detail::scaled_casimir(A2);
  const std::size_t k0 = detail::kernel_dimension_shifted(C2, 0);
  const std::size_t khalf = detail::kernel_dimension_shifted(C2, 27);
  const std::size_t kone = detail::kernel_dimension_shifted(C2, 72);
  add("28 = 9[0] + 8[1/2] + [1]", k0 == 9 && khalf == 16 && kone == 3,
      "spin 0 states " + std::to_string(k0) + ", spin 1/2 states " + std::to_string(khalf) + ", spin 1 states " +
          std::to_string(kone));
  return report;
}

}  // namespace matryoshka
