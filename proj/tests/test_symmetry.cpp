#include <gtest/gtest.h>

#include <random>

#include "matryoshka.hpp"

using namespace matryoshka;

namespace {

SignedPermutation P(int d, const char* s) { return SignedPermutation::parse(d, s); }

std::size_t factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

}  // namespace

TEST(SignedPermutation, ParseAndPrint) {
  const auto g = P(7, "(1 2 5 4 6 7 3)");
  EXPECT_EQ(g.image(1), 2);
  EXPECT_EQ(g.image(3), 1);
  EXPECT_EQ(g.to_string(), "(1 2 5 4 6 7 3)");
  EXPECT_EQ(g.order(), 7);
  EXPECT_EQ(P(4, "(1 2) [-3]").to_string(), "(1 2) [-3]");
  EXPECT_EQ(P(4, "(1 2) [-3]").eta(3), -1);
  EXPECT_EQ(P(10, "(1 2)(10 3)").image(10), 3);
  EXPECT_THROW(P(4, "(1 5)"), DimensionError);
  EXPECT_THROW(P(4, "(1 2)(2 3)"), DimensionError);
  EXPECT_THROW(P(4, "(1 2"), DimensionError);
}

TEST(SignedPermutation, GroupLaws) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 50; ++t) {
    const auto a = SignedPermutation::random(8, rng), b = SignedPermutation::random(8, rng);
    EXPECT_EQ(a * a.inverse(), SignedPermutation::identity(8));
    EXPECT_EQ((a * b).inverse(), b.inverse() * a.inverse());
    EXPECT_EQ(SignedPermutation::from_code(8, a.code()), a);
    EXPECT_EQ(SignedPermutation::parse(8, a.to_string()), a);
  }
}

TEST(Action, PullbackConvention) {
  // (g f)_I = eta_I f_sigma(I): the transposition (1 2) negates e12.
  EXPECT_EQ(act(P(2, "(1 2)"), epsilon(2)), negate(epsilon(2)));
  EXPECT_EQ(act(P(2, "() [-1]"), epsilon(2)), negate(epsilon(2)));
  EXPECT_EQ(act(P(2, "(1 2) [-1]"), epsilon(2)), epsilon(2));
  Form e2(3, 1);
  e2.set(IndexTuple{2}, 1);
  Form e1(3, 1);
  e1.set(IndexTuple{1}, 1);
  // sigma(1) = 2, so (g e2)_1 = (e2)_2 = 1.
  EXPECT_EQ(act(P(3, "(1 2 3)"), e2), e1);
}

TEST(Action, IsAHomomorphism) {
  std::mt19937_64 rng(5);
  const Form phi = spin7();
  for (int t = 0; t < 40; ++t) {
    const auto a = SignedPermutation::random(8, rng), b = SignedPermutation::random(8, rng);
    EXPECT_EQ(act(a * b, phi), act(a, act(b, phi)));
  }
}

TEST(Group, ClosureOrders) {
  EXPECT_EQ(Group::generated_by(5, {P(5, "(1 2)"), P(5, "(1 2 3 4 5)")}).order(), 120u);
  EXPECT_EQ(Group::generated_by(4, {P(4, "(1 2)"), P(4, "(1 2 3 4)"), P(4, "() [-1]")}).order(), 384u);
  EXPECT_EQ(Group::generated_by(7, {P(7, "(1 2 5 4 6 7 3)")}).order(), 7u);
  EXPECT_THROW(Group::generated_by(8, {P(8, "(1 2)"), P(8, "(1 2 3 4 5 6 7 8)")}, 100), SearchBoundError);
}

TEST(Group, CommutatorSubgroups) {
  const Group s4 = Group::generated_by(4, {P(4, "(1 2)"), P(4, "(1 2 3 4)")});
  EXPECT_EQ(commutator_subgroup(s4).order(), 12u);
  EXPECT_EQ(commutator_subgroup(commutator_subgroup(s4)).order(), 4u);
  EXPECT_TRUE(commutator_subgroup(Group::generated_by(7, {P(7, "(1 2 5 4 6 7 3)")})).order() == 1u);
}

TEST(Group, TransitivityAndAbelian) {
  const Group c7 = Group::generated_by(7, {P(7, "(1 2 5 4 6 7 3)")});
  EXPECT_TRUE(c7.is_transitive());
  EXPECT_TRUE(c7.is_abelian());
  EXPECT_FALSE(Group::generated_by(4, {P(4, "(1 2)")}).is_transitive());
}

TEST(Census, KahlerAgainstExhaustiveSearch) {
  for (int n : {1, 2, 3}) {
    const auto fast = compute_census(kahler(n));
    EXPECT_EQ(fast.perm_symmetries.order(), factorial(n));
    EXPECT_EQ(fast.perm_antisymmetries.size(), factorial(n));
    EXPECT_EQ(fast.orth_symmetry_count, (std::size_t{1} << (2 * n)) * factorial(n));
    EXPECT_EQ(fast.orth_antisymmetry_count, (std::size_t{1} << (2 * n)) * factorial(n));
    const auto slow = brute_force_census(kahler(n));
    EXPECT_EQ(fast.orth_symmetries, slow.orth_symmetries);
    EXPECT_EQ(fast.orth_antisymmetries, slow.orth_antisymmetries);
  }
}

// Oracle: for epsilon_d every permutation is a symmetry or antisymmetry by
// parity, and every signed permutation by determinant.
TEST(Census, EpsilonByDeterminant) {
  for (int d = 2; d <= 6; ++d) {
    const auto c = compute_census(epsilon(d));
    EXPECT_EQ(c.perm_symmetries.order(), factorial(d) / 2);
    EXPECT_EQ(c.perm_antisymmetries.size(), factorial(d) / 2);
    EXPECT_EQ(c.orth_symmetry_count, (factorial(d) << d) / 2);
    for (const auto& g : c.orth_symmetries.elements()) EXPECT_TRUE(g.in_SO());
  }
}

TEST(Census, G2Permutations) {
  const auto c = compute_census(g2());
  EXPECT_EQ(c.perm_symmetries.order(), 21u);
  EXPECT_TRUE(c.perm_antisymmetries.empty());
  for (const auto& g : c.orth_symmetries.elements()) EXPECT_EQ(classify_element(g, g2()), ElementClass::Symmetry);
  for (auto code : c.orth_antisymmetries)
    EXPECT_EQ(classify_element(SignedPermutation::from_code(7, code), g2()), ElementClass::Antisymmetry);
}

TEST(Census, LargeOrthogonalSetsAreCountedNotStored) {
  CensusOptions o;
  o.max_group_order = 100;
  const auto c = compute_census(g2(), o);
  EXPECT_FALSE(c.orthogonal_stored);
  EXPECT_EQ(c.orth_symmetry_count + c.orth_antisymmetry_count, compute_census(g2()).orth_symmetries.order() * 2);
  EXPECT_THROW(c.orth_bisymmetries(), SearchBoundError);
}

TEST(Democracy, SymmetriesOrBisymmetries) {
  EXPECT_TRUE(is_democratic(g2()));
  EXPECT_EQ(democracy(compute_census(g2())).achieved_by, "symmetries");
  EXPECT_TRUE(is_democratic(kahler(3)));
  EXPECT_FALSE(is_democratic(table1()[0].representative));
}

TEST(StabilityGroup, EvenPermutationsOfTheSupport) {
  EXPECT_EQ(stability_group(epsilon(4)).order(), 12u);
  EXPECT_EQ(stability_group(g2()).order(), 1u);
}

TEST(Presentation, SeedsAndConflicts) {
  EXPECT_EQ(expand_presentation(6, {{{1, 2}, 1}}, {P(6, "(1 3 5)(2 4 6)")}), kahler(3));
  EXPECT_EQ(expand_presentation(7, {{{1, 2, 7}, 1}}, {P(7, "(1 2 5 4 6 7 3)")}), g2());
  // (1 2) maps e12 to -e12 under pushforward.
  EXPECT_THROW(expand_presentation(2, {{{1, 2}, 1}}, {P(2, "(1 2)")}), IncompatiblePresentationError);
}

TEST(Canonical, InvariantAlongOrbits) {
  std::mt19937_64 rng(13);
  for (const Form& f : {g2(), spin7(), kahler(3), phiC()}) {
    const Form c = canonical_representative(f);
    for (int t = 0; t < 5; ++t) EXPECT_EQ(canonical_representative(act(SignedPermutation::random(f.dim(), rng), f)), c);
  }
  EXPECT_FALSE(orbit_equivalent(phiC(), phiB()));
  EXPECT_TRUE(orbit_equivalent(phiC(), negate(phiC())));
}
