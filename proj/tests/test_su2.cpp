#include <gtest/gtest.h>

#include "matryoshka.hpp"

using namespace matryoshka;

TEST(QuadraticField, Sqrt3AndI) {
  const Q3 r = Q3::root();
  EXPECT_EQ(r * r, Q3(3));
  EXPECT_EQ(Q3(mpq_class(1, 2), 1).inverse() * Q3(mpq_class(1, 2), 1), Q3(1));
  const Q3i i = Q3i::root();
  EXPECT_EQ(i * i, Q3i(-1));
  const Q3i z(Q3(1, 1), Q3(2));
  EXPECT_EQ(z / z, Q3i(1));
  EXPECT_EQ(z * z.conj(), Q3i(z.norm()));
}

TEST(Su2, AllReductionChecksPass) {
  const auto report = verify_su2_reduction();
  EXPECT_GE(report.checks.size(), 10u);
  for (const auto& c : report.checks) EXPECT_TRUE(c.passed) << c.name << ": " << c.detail;
  EXPECT_TRUE(report.all_passed());
}

TEST(Su2, InducedMatrixIsAntisymmetricDerivation) {
  const auto parts = su2_integer_parts();
  for (const auto& A : parts) {
    EXPECT_TRUE(A.is_antisymmetric());
    const auto B = induced_on_two_forms(A);
    EXPECT_EQ(B.rows(), 28u);
    EXPECT_TRUE(B.is_antisymmetric());
  }
}
