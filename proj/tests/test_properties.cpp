#include <gtest/gtest.h>

#include "matryoshka.hpp"

using namespace matryoshka;

namespace {

void expect_clean(const PropertyResult& r) {
  EXPECT_EQ(r.cases, 100) << r.name;
  EXPECT_EQ(r.failures, 0) << r.name << ": " << r.first_failure;
}

}  // namespace

TEST(Properties, DoubleStar) { expect_clean(property_double_star(100)); }
TEST(Properties, ActionHomomorphism) { expect_clean(property_action_homomorphism(100)); }
TEST(Properties, CensusOracle) { expect_clean(property_census_oracle(100)); }
TEST(Properties, CayleyHamilton) { expect_clean(property_cayley_hamilton(100)); }
TEST(Properties, CharPolyInvariance) { expect_clean(property_charpoly_invariance(100)); }

TEST(Properties, RandomFormsAreDeterministic) {
  std::mt19937_64 a(kPropertySeed), b(kPropertySeed);
  EXPECT_EQ(random_special_form(8, 4, a), random_special_form(8, 4, b));
}
