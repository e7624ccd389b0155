#include <gtest/gtest.h>

#include <random>

#include "matryoshka.hpp"

using namespace matryoshka;

namespace {

Form basis(int d, std::initializer_list<int> idx) {
  Form f(d, static_cast<int>(idx.size()));
  f.set(IndexTuple(idx), 1);
  return f;
}

// |a|^2 from components.
mpz_class norm2(const Form& f) {
  mpz_class s = 0;
  for (const auto& [t, c] : f.components()) s += c * c;
  return s;
}

}  // namespace

TEST(SortingSign, CountsInversionsAndRepeats) {
  EXPECT_EQ(sorting_sign(std::vector<int>{1, 2, 3}), 1);
  EXPECT_EQ(sorting_sign(std::vector<int>{2, 1, 3}), -1);
  EXPECT_EQ(sorting_sign(std::vector<int>{3, 1, 2}), 1);
  EXPECT_EQ(sorting_sign(std::vector<int>{3, 2, 1}), -1);
  EXPECT_EQ(sorting_sign(std::vector<int>{1, 2, 1}), 0);
  EXPECT_EQ(sorting_sign(std::vector<int>{}), 1);
}

TEST(IndexTuple, RejectsUnsortedInput) {
  EXPECT_THROW(IndexTuple({2, 1}), Error);
  EXPECT_THROW(IndexTuple({1, 1}), Error);
}

TEST(Form, ValueIsAntisymmetric) {
  Form f(4, 2);
  f.set(IndexTuple{1, 3}, 5);
  EXPECT_EQ(f.value(std::vector<int>{1, 3}), 5);
  EXPECT_EQ(f.value(std::vector<int>{3, 1}), -5);
  EXPECT_EQ(f.value(std::vector<int>{1, 1}), 0);
  f.accumulate(std::vector<int>{3, 1}, 5);
  EXPECT_TRUE(f.is_zero());
}

TEST(Form, SpecialMeansUnitCoefficients) {
  EXPECT_TRUE(g2().is_special());
  Form f(3, 1);
  f.set(IndexTuple{1}, 2);
  EXPECT_FALSE(f.is_special());
}

TEST(Wedge, BasisProducts) {
  EXPECT_EQ(wedge(basis(2, {1}), basis(2, {2})), epsilon(2));
  EXPECT_EQ(wedge(basis(2, {2}), basis(2, {1})), negate(epsilon(2)));
  EXPECT_TRUE(wedge(basis(3, {1}), basis(3, {1})).is_zero());
  EXPECT_THROW(wedge(basis(3, {1, 2}), basis(3, {1, 3})), DegreeError);
  EXPECT_THROW(wedge(basis(3, {1}), basis(4, {1})), DimensionError);
}

TEST(Wedge, GradedCommutativeAndAssociative) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    const int d = 6;
    const int p = trial % 3 + 1, q = (trial / 3) % 2 + 1, r = 1;
    const Form a = random_special_form(d, p, rng, 0.5), b = random_special_form(d, q, rng, 0.5),
               c = random_special_form(d, r, rng, 0.5);
    EXPECT_EQ(wedge(a, b), scale(wedge(b, a), (p * q) % 2 ? -1 : 1));
    EXPECT_EQ(wedge(wedge(a, b), c), wedge(a, wedge(b, c)));
  }
}

TEST(Hodge, LowDimensionalBasis) {
  EXPECT_EQ(hodge_star(unit_form(3)), basis(3, {1, 2, 3}));
  EXPECT_EQ(hodge_star(basis(3, {1})), basis(3, {2, 3}));
  EXPECT_EQ(hodge_star(basis(3, {2})), negate(basis(3, {1, 3})));
  EXPECT_EQ(hodge_star(basis(4, {1, 2})), basis(4, {3, 4}));
}

// Oracle: a ^ *a = |a|^2 vol, independently of how the star picks signs.
TEST(Hodge, WedgeWithStarIsNormSquared) {
  std::mt19937_64 rng(11);
  for (int d = 1; d <= 8; ++d)
    for (int p = 0; p <= d; ++p) {
      const Form a = random_special_form(d, p, rng, 0.6);
      const Form vol = wedge(a, hodge_star(a));
      EXPECT_EQ(vol.coefficient(iota_tuple(d)), norm2(a)) << "d=" << d << " p=" << p;
    }
}

TEST(Hodge, DoubleStarSignExhaustiveBasis) {
  for (int d = 1; d <= 7; ++d)
    for (int p = 0; p <= d; ++p) {
      std::mt19937_64 rng(d * 31 + p);
      const Form a = random_special_form(d, p, rng, 1.0);
      EXPECT_EQ(hodge_star(hodge_star(a)), scale(a, (p * (d - p)) % 2 ? -1 : 1));
    }
}

TEST(Hodge, ZeroFirstOrientationFlipsFromTenDimensions) {
  EXPECT_EQ(hodge_star(g2(), Orientation::zero_first), hodge_star(g2()));
  const Form om = build_omega10();
  EXPECT_EQ(hodge_star(om, Orientation::zero_first), negate(hodge_star(om)));
}

TEST(ContractPlane, EpsilonAndOrderOfPlane) {
  EXPECT_EQ(contract_plane(epsilon(4), 1, 2), epsilon(2));
  EXPECT_EQ(contract_plane(epsilon(4), 2, 1), negate(epsilon(2)));
  EXPECT_EQ(contract_plane(epsilon(4), 1, 3), negate(epsilon(2)));
  EXPECT_THROW(contract_plane(epsilon(4), 2, 2), DegeneratePlaneError);
  EXPECT_THROW(contract_plane(basis(4, {1}), 1, 2), DegreeError);
  EXPECT_THROW(contract_plane(epsilon(4), 1, 5), DimensionError);
}

// Oracle: contraction is f(e_i, e_j, ...) read off by brute force over ordered indices.
TEST(ContractPlane, MatchesDirectEvaluation) {
  const Form om = build_omega10();
  for (auto [i, j] : std::vector<std::pair<int, int>>{{1, 2}, {10, 1}, {1, 10}, {4, 7}}) {
    const Form c = contract_plane(om, i, j);
    std::vector<int> rest;
    for (int k = 1; k <= 10; ++k)
      if (k != i && k != j) rest.push_back(k);
    for (const auto& [t, v] : c.components()) {
      std::vector<int> full = {i, j};
      for (int k : t) full.push_back(rest[k - 1]);
      EXPECT_EQ(v, om.value(full));
    }
  }
}

TEST(Restrict, KeepsComponentsInsideSubset) {
  const Form psi = g2();
  EXPECT_EQ(restrict_to(psi, iota_tuple(7)), psi);
  const Form r = restrict_to(psi, IndexTuple{1, 2, 7});
  EXPECT_EQ(r.weight(), 1u);
  EXPECT_EQ(r.coefficient(IndexTuple{1, 2, 3}), psi.coefficient(IndexTuple{1, 2, 7}));
  EXPECT_THROW(restrict_to(psi, IndexTuple{1, 2}), DegreeError);
  EXPECT_THROW(restrict_to(psi, IndexTuple{1, 2, 8}), DimensionError);
}

TEST(Arithmetic, AddScaleNegate) {
  const Form a = g2();
  EXPECT_TRUE((a - a).is_zero());
  EXPECT_EQ(a + a, scale(a, 2));
  EXPECT_TRUE(scale(a, 0).is_zero());
  EXPECT_THROW(a + spin7(), DimensionError);
}
