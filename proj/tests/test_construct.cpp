#include <gtest/gtest.h>

#include <set>

#include "matryoshka.hpp"

using namespace matryoshka;

namespace {

SignedPermutation P(int d, const char* s) { return SignedPermutation::parse(d, s); }

}  // namespace

TEST(Catalog, WeightsAndShapes) {
  const std::vector<std::tuple<std::string, int, int, std::size_t>> expect = {
      {"epsilon4", 4, 4, 1}, {"kahler3", 6, 2, 3}, {"g2", 7, 3, 7},     {"spin7", 8, 4, 14},
      {"omega10", 10, 6, 50}, {"phiA", 10, 4, 10}, {"phiB", 10, 4, 60}, {"phiC", 10, 4, 40},
      {"phiD", 10, 4, 40}};
  for (const auto& [name, d, p, w] : expect) {
    const Form f = catalog(name);
    EXPECT_EQ(f.dim(), d) << name;
    EXPECT_EQ(f.degree(), p) << name;
    EXPECT_EQ(f.weight(), w) << name;
    EXPECT_TRUE(f.is_special()) << name;
  }
  EXPECT_THROW(catalog("nonsense"), CatalogError);
  for (const auto& n : catalog_names()) EXPECT_NO_THROW(catalog(n)) << n;
}

TEST(G2, FanoLinesInEveryPairOnce) {
  const Form psi = g2();
  std::set<std::pair<int, int>> pairs;
  for (const auto& [t, c] : psi.components())
    for (int a = 0; a < 3; ++a)
      for (int b = a + 1; b < 3; ++b) EXPECT_TRUE(pairs.insert({t[a], t[b]}).second);
  EXPECT_EQ(pairs.size(), 21u);
}

TEST(Spin7, RestrictionAndContractionGiveG2) {
  const Form phi = spin7(), psi = g2();
  EXPECT_EQ(contract_trailing(phi, {8}), psi);
  EXPECT_EQ(restrict_to(phi, iota_tuple(7)), hodge_star(psi));
  EXPECT_EQ(phi, hodge_star(phi));
}

TEST(Omega10, MatchesPublishedTable) {
  const auto& table = reference::omega10_table();
  EXPECT_EQ(table.size(), 50u);
  EXPECT_EQ(std::set<std::string>(table.begin(), table.end()).size(), 50u);
  EXPECT_EQ(build_omega10(), reference::omega10_from_table());
}

TEST(Omega10, LiftRestrictsToSpin7) {
  const Form om = build_omega10();
  EXPECT_EQ(contract_trailing(om, {9, 10}), spin7());
}

TEST(Omega10, CyclicSymmetryAndAntisymmetry) {
  const Form om = build_omega10();
  EXPECT_EQ(act(P(10, "(1 3 5 7 9)(2 4 6 8 10)"), om), om);
  EXPECT_EQ(act(P(10, "(1 2)(10 3)(9 4)(8 5)(7 6)"), om), negate(om));
}

TEST(PlaneShift, SquareIsProductOfReflections) {
  const auto s = plane_shift(4);
  EXPECT_EQ(s.to_string(), "(1 3 5 7)(2 4 6 8)");
  EXPECT_EQ(s * s, P(8, "(1 8)(2 7)(3 6)(4 5)") * P(8, "(1 4)(2 3)(5 8)(6 7)"));
}

TEST(Extend, EmbeddingExamples) {
  const auto h7 = P(7, "(1 2 5 4 6 7 3)");
  EXPECT_EQ(extend(epsilon(2), {2, 7, 2, 3, {7}, {h7}}), g2());
  EXPECT_EQ(extend(epsilon(4), {4, 7, 4, 4, {}, {h7}}), hodge_star(g2()));
  EXPECT_EQ(extend(epsilon(2), {2, 6, 2, 2, {}, {plane_shift(3)}}), kahler(3));
  EXPECT_TRUE(orbit_equivalent(extend(kahler(3), {6, 7, 2, 3, {7}, {h7}}), g2()));
  EXPECT_TRUE(orbit_equivalent(extend(kahler(3), {6, 7, 2, 3, {7}, {P(7, "(2 6 5)(3 4 7)")}}), g2()));
}

TEST(Extend, ValidationAndConflicts) {
  EXPECT_THROW(extend(g2(), {6, 8, 3, 4, {}, {}}), DimensionError);
  EXPECT_THROW(extend(g2(), {7, 8, 3, 5, {}, {}}), DimensionError);
  EXPECT_THROW(extend(g2(), {7, 8, 3, 4, {3}, {}}), DimensionError);
  EXPECT_THROW(extend(g2(), {7, 8, 3, 4, {8}, {P(7, "(1 2)")}}), DimensionError);
  // The transposition flips the e12 seed onto itself with the opposite sign.
  EXPECT_THROW(extend(epsilon(2), {2, 3, 2, 2, {}, {P(3, "(1 2)")}}), IncompatibleEmbeddingError);
}

TEST(ContractTrailing, UndoesTheAppendedSlots) {
  const Form psi = g2();
  const Form phi = extend(psi, {7, 8, 3, 4, {8}, {P(8, "(1 2)(3 6 7 4 5 8)")}});
  EXPECT_EQ(contract_trailing(phi, {8}), psi);
  EXPECT_TRUE(orbit_equivalent(phi, spin7()));
}

TEST(ComplexFamily, DualOfOmegaSplits) {
  const Form om = build_omega10();
  EXPECT_EQ(hodge_star(om, kHighDimOrientation), negate(phiA()) - phiC());
  EXPECT_EQ(hodge_star(om), phiA() + phiC());
}

TEST(ComplexFamily, OmegaAPlanesGiveTheEightDimensionalForm) {
  const Form omA = omega_dual(ComplexPattern::A);
  EXPECT_EQ(omA.degree(), 6);
  for (int j = 1; j <= 5; ++j) EXPECT_TRUE(orbit_equivalent(contract_plane(omA, 2 * j - 1, 2 * j), su4u1_8d()));
}

TEST(Psi12, ContractsBackToItsSource) {
  for (auto pat : {ComplexPattern::A, ComplexPattern::B}) {
    const Form src = omega_dual(pat);
    const Form psi = build_psi12(src);
    EXPECT_EQ(psi.dim(), 12);
    EXPECT_EQ(psi.degree(), 8);
    EXPECT_EQ(contract_trailing(psi, {11, 12}), src);
  }
}

TEST(Embed, PadsDimension) {
  const Form e = embed(g2(), 9);
  EXPECT_EQ(e.dim(), 9);
  EXPECT_EQ(e.weight(), 7u);
  EXPECT_EQ(restrict_to(e, iota_tuple(7)), g2());
}
