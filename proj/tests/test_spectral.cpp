#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "matryoshka.hpp"

using namespace matryoshka;

namespace {

IntMatrix from_rows(const std::vector<std::vector<long>>& rows) {
  IntMatrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  return m;
}

IntMatrix random_matrix(std::size_t n, std::mt19937_64& rng, int lo, int hi) {
  std::uniform_int_distribution<int> u(lo, hi);
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = u(rng);
  return m;
}

}  // namespace

TEST(Ranking, KnownValuesAndErrors) {
  EXPECT_EQ(rank_tuple(IndexTuple{1, 2}, 10, 2), 1u);
  EXPECT_EQ(rank_tuple(IndexTuple{9, 10}, 10, 2), 45u);
  EXPECT_EQ(rank_tuple(IndexTuple{8, 9, 10}, 10, 3), 120u);
  EXPECT_EQ(unrank(45, 10, 2), (IndexTuple{9, 10}));
  EXPECT_THROW(unrank(0, 10, 2), RankError);
  EXPECT_THROW(unrank(46, 10, 2), RankError);
  EXPECT_THROW(rank_tuple(IndexTuple{1, 11}, 10, 2), RankError);
  EXPECT_THROW(rank_tuple(IndexTuple{1, 2, 3}, 10, 2), RankError);
}

// Oracle: colex order is sorting by the reversed tuple.
TEST(Ranking, ColexBijectionOnTriples) {
  std::vector<std::vector<int>> all;
  for (int a = 1; a <= 10; ++a)
    for (int b = a + 1; b <= 10; ++b)
      for (int c = b + 1; c <= 10; ++c) all.push_back({a, b, c});
  std::sort(all.begin(), all.end(), [](const auto& x, const auto& y) {
    return std::vector<int>(x.rbegin(), x.rend()) < std::vector<int>(y.rbegin(), y.rend());
  });
  ASSERT_EQ(all.size(), 120u);
  for (std::size_t k = 0; k < all.size(); ++k) {
    EXPECT_EQ(rank_tuple(IndexTuple(all[k]), 10, 3), k + 1);
    EXPECT_EQ(unrank(k + 1, 10, 3), IndexTuple(all[k]));
  }
}

TEST(CharPoly, HandComputedSmallMatrices) {
  // [[a b][c d]] -> x^2 - (a+d) x + (ad - bc)
  EXPECT_EQ(char_poly(from_rows({{1, 2}, {3, 4}})), IntPolynomial({-2, -5, 1}));
  EXPECT_EQ(char_poly(from_rows({{0, -1}, {1, 0}})), IntPolynomial({1, 0, 1}));
  EXPECT_EQ(char_poly(from_rows({{2, 0, 0}, {0, 3, 0}, {0, 0, 5}})), IntPolynomial({-30, 31, -10, 1}));
  EXPECT_EQ(char_poly(IntMatrix(3, 3)), IntPolynomial({0, 0, 0, 1}));
  EXPECT_EQ(char_poly_berkowitz(from_rows({{1, 2}, {3, 4}})), IntPolynomial({-2, -5, 1}));
}

TEST(CharPoly, MultimodularAgreesWithDivisionFree) {
  std::mt19937_64 rng(17);
  for (std::size_t n : {1u, 2u, 5u, 9u, 16u, 30u}) {
    const IntMatrix m = random_matrix(n, rng, -1000000, 1000000);
    EXPECT_EQ(char_poly(m), char_poly_berkowitz(m)) << n;
  }
  // Entries beyond a single word force several primes.
  IntMatrix big(4, 4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) big(i, j) = mpz_class("123456789012345678901") * (i + 2 * j + 1) - j * j;
  EXPECT_EQ(char_poly(big), char_poly_berkowitz(big));
}

TEST(CharPoly, CayleyHamilton) {
  std::mt19937_64 rng(19);
  const IntMatrix m = random_matrix(12, rng, -3, 3);
  EXPECT_TRUE(evaluate(char_poly(m), m).is_zero());
  const IntMatrix s = endomorphism_matrix(hodge_star(build_omega10(), kHighDimOrientation), 2).matrix;
  EXPECT_TRUE(evaluate(char_poly(s), s).is_zero());
}

TEST(Rank, BareissExact) {
  EXPECT_EQ(rank(from_rows({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}})), 2u);
  EXPECT_EQ(rank(IntMatrix(3, 5)), 0u);
  EXPECT_EQ(rank(IntMatrix::identity(7)), 7u);
  EXPECT_EQ(rank(from_rows({{0, 0, 1}, {0, 1, 0}, {1, 0, 0}, {1, 1, 1}})), 3u);
}

TEST(EndomorphismMatrix, ShapeAndParity) {
  const auto m = endomorphism_matrix(epsilon(4), 2);
  EXPECT_EQ(m.size(), 6u);
  EXPECT_TRUE(m.matrix.is_symmetric());
  EXPECT_EQ(char_poly(m.matrix), expand(reference::factorization("epsilon4 on 2-forms")));
  EXPECT_TRUE(endomorphism_matrix(build_omega10(), 3).matrix.is_antisymmetric());
  EXPECT_THROW(endomorphism_matrix(g2(), 1), DegreeError);
  EXPECT_THROW(endomorphism_matrix(build_omega10(), 3, "", 100), SearchBoundError);
}

// Oracle: M acting on e_ab gives f_{ab..}, so M e_12 lists the f_12cd.
TEST(EndomorphismMatrix, ColumnsAreContractions) {
  const Form phi = spin7();
  const auto m = endomorphism_matrix(phi, 2);
  for (std::size_t a = 1; a <= m.size(); ++a) {
    const IndexTuple A = unrank(a, 8, 2);
    for (std::size_t b = 1; b <= m.size(); ++b) {
      const IndexTuple B = unrank(b, 8, 2);
      EXPECT_EQ(m.matrix(a - 1, b - 1), phi.value(std::vector<int>{A[0], A[1], B[0], B[1]}));
    }
  }
}

TEST(Eigenspaces, DimensionsAndErrors) {
  const IntMatrix s = endomorphism_matrix(hodge_star(build_omega10(), kHighDimOrientation), 2).matrix;
  EXPECT_EQ(eigenspace_dimension(s, IntPolynomial::linear(1)), 24u);
  EXPECT_EQ(eigenspace_dimension(s, IntPolynomial::linear(-1)), 8u);
  EXPECT_EQ(eigenspace_dimension(s, IntPolynomial::linear(-4)), 1u);
  EXPECT_EQ(eigenspace_dimension(s, IntPolynomial({-19, 2, 1})), 12u);
  EXPECT_THROW(eigenspace_dimension(s, IntPolynomial::linear(2)), FactorError);
  EXPECT_THROW(eigenspace_dimension(s, IntPolynomial({1, 2})), FactorError);
}

TEST(Stabilizer, KnownDimensions) {
  EXPECT_EQ(stabilizer_algebra_dimension(epsilon(4)), 6u);
  EXPECT_EQ(stabilizer_algebra_dimension(g2()), 14u);
  EXPECT_EQ(stabilizer_algebra_dimension(spin7()), 21u);
  EXPECT_EQ(stabilizer_algebra_dimension(kahler(3)), 9u);
  EXPECT_EQ(stabilizer_algebra_dimension(build_omega10()), 16u);
}

TEST(Stabilizer, RotationOfEpsilonIsZero) {
  for (int a = 1; a <= 4; ++a)
    for (int b = a + 1; b <= 4; ++b) EXPECT_TRUE(rotate_derivation(epsilon(4), a, b).is_zero());
  EXPECT_FALSE(rotate_derivation(kahler(2), 1, 3).is_zero());
}

TEST(FactorWith, RecoversReferenceFactors) {
  const IntPolynomial p = expand(reference::factorization("phiB on 2-forms"));
  const auto f = factor_with(p, reference::known_factors());
  ASSERT_TRUE(f.has_value());
  EXPECT_TRUE(verify_factorization(p, *f));
  EXPECT_FALSE(factor_with(IntPolynomial({7, 0, 1}), reference::known_factors()).has_value());
}
