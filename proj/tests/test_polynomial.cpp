#include <gtest/gtest.h>

#include "matryoshka.hpp"

using namespace matryoshka;

TEST(IntPolynomial, ArithmeticAndPrinting) {
  const auto x = IntPolynomial::x();
  const auto p = (x - IntPolynomial::constant(1)) * (x + IntPolynomial::constant(2));
  EXPECT_EQ(p, IntPolynomial({-2, 1, 1}));
  EXPECT_EQ(p.to_string(), "x^2+x-2");
  EXPECT_EQ(IntPolynomial::parse("x^2+x-2"), p);
  EXPECT_EQ(IntPolynomial::parse("-3x^4+x"), IntPolynomial({0, 1, 0, 0, -3}));
  EXPECT_EQ(p.evaluate(1), 0);
  EXPECT_EQ(p.evaluate(-2), 0);
  EXPECT_EQ(p.reflect(), IntPolynomial({-2, -1, 1}));
  EXPECT_EQ(x.pow(3), IntPolynomial({0, 0, 0, 1}));
  EXPECT_EQ(IntPolynomial::linear(5), IntPolynomial({-5, 1}));
}

TEST(IntPolynomial, DivisionByMonic) {
  const IntPolynomial p({-6, 11, -6, 1});  // (x-1)(x-2)(x-3)
  auto [q, r] = p.divmod(IntPolynomial::linear(2));
  EXPECT_TRUE(r.is_zero());
  EXPECT_EQ(q, IntPolynomial({3, -4, 1}));
  EXPECT_FALSE(p.divisible_by(IntPolynomial::linear(4)));
  EXPECT_THROW(p.divmod(IntPolynomial({1, 2})), FactorError);
}

TEST(Factorization, ParseExpandAndVerify) {
  const auto f = parse_factorization("(x+4)(x+1)^8(x-1)^24(x^2+2x-19)^6");
  ASSERT_EQ(f.size(), 4u);
  EXPECT_EQ(f[3].multiplicity, 6);
  EXPECT_EQ(expand(f).degree(), 45);
  EXPECT_EQ(to_string(f), "(x+4)(x+1)^8(x-1)^24(x^2+2x-19)^6");
  EXPECT_TRUE(verify_factorization(IntPolynomial({-1, 0, 1}), parse_factorization("(x-1)(x+1)")));
  EXPECT_FALSE(verify_factorization(IntPolynomial({-1, 0, 1}), parse_factorization("(x-1)^2")));
}

// Degrees of the reference polynomials equal binom(D, k) of their matrices.
TEST(ReferencePolynomials, DegreesMatchMatrixSizes) {
  const std::map<std::string, int> sizes = {
      {"omega10 on 3-forms", 120},        {"dual of omega10 on 2-forms", 45}, {"t17 on 2-forms", 28},
      {"phiA on 2-forms", 45},            {"phiB on 2-forms", 45},            {"phiC on 2-forms", 45},
      {"phiD on 2-forms", 45},            {"omegaA on 3-forms", 120},         {"omegaB on 3-forms", 120},
      {"omegaC on 3-forms", 120},         {"omegaD on 3-forms", 120},         {"dual of psi12A on 2-forms", 66},
      {"dual of psi12B on 2-forms", 66},  {"epsilon4 on 2-forms", 6}};
  for (const auto& np : reference::polynomials()) {
    ASSERT_TRUE(sizes.count(np.name)) << np.name;
    EXPECT_EQ(expand(reference::factorization(np.name)).degree(), sizes.at(np.name)) << np.name;
  }
  EXPECT_THROW(reference::factorization("missing"), Error);
}
