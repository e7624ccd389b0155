#include <gtest/gtest.h>

#include <random>

#include "matryoshka.hpp"

using namespace matryoshka;

TEST(Invariants, SingleComponentNormalization) {
  const Form a = table1()[0].representative;
  EXPECT_EQ(invariant_I1(a), -2);
  EXPECT_EQ(invariant_I2(a), 0);
  // e12 + e34: I2 = 8 sums the 8 ordered quadruples pairing the two planes.
  EXPECT_EQ(invariant_I2(kahler(2)), 8);
  EXPECT_THROW(invariant_I1(g2()), DimensionError);
  EXPECT_THROW(invariant_I2(kahler(3)), DimensionError);
}

TEST(Table1, RowsRegenerate) {
  ASSERT_EQ(table1().size(), 19u);
  for (const auto& e : table1()) {
    EXPECT_EQ(invariant_I1(e.representative), e.I1) << e.label;
    EXPECT_EQ(invariant_I2(e.representative), e.I2) << e.label;
    const auto cls = classify_2form_4d(e.representative);
    ASSERT_TRUE(cls.has_value());
    EXPECT_EQ(cls->label, e.label);
  }
  EXPECT_FALSE(classify_2form_4d(Form(4, 2)).has_value());
}

TEST(Table1, InvariantPairsDistinct) {
  std::set<std::pair<mpz_class, mpz_class>> seen;
  for (const auto& e : table1()) EXPECT_TRUE(seen.insert({e.I1, e.I2}).second) << e.label;
}

// |I2| is constant on O(4,Z) orbits; I2 itself on SO(4,Z) orbits.
TEST(Invariants, OrbitBehaviour) {
  std::mt19937_64 rng(23);
  for (const auto& e : table1()) {
    for (int t = 0; t < 30; ++t) {
      const auto g = SignedPermutation::random(4, rng);
      const Form h = act(g, e.representative);
      EXPECT_EQ(invariant_I1(h), e.I1);
      EXPECT_EQ(abs(invariant_I2(h)), abs(e.I2));
      if (g.in_SO()) EXPECT_EQ(invariant_I2(h), e.I2);
      else EXPECT_EQ(invariant_I2(h), -e.I2);
    }
  }
}

TEST(Graph, SupportDistanceIsAMetric) {
  EXPECT_EQ(support_distance(IndexTuple{1, 2, 3}, IndexTuple{1, 2, 3}), 0);
  EXPECT_EQ(support_distance(IndexTuple{1, 2, 3}, IndexTuple{1, 4, 5}), 2);
  EXPECT_EQ(support_distance(IndexTuple{1, 2, 3, 4}, IndexTuple{5, 6, 7, 8}), 4);
}

TEST(Graph, VertexCounts) {
  const std::vector<std::pair<Form, std::size_t>> cases = {{g2(), 7},   {spin7(), 14}, {build_omega10(), 50},
                                                            {phiA(), 10}, {phiB(), 60},  {phiC(), 40},
                                                            {phiD(), 40}};
  for (const auto& [f, n] : cases) EXPECT_EQ(vertex_graph(f).vertices.size(), n);
}

TEST(Graph, FanoPlaneIsComplete) {
  const auto g = vertex_graph(g2());
  EXPECT_EQ(g.edges.size(), 21u);
  for (const auto& e : g.edges) EXPECT_EQ(e[2], 2u);
}

TEST(Graph, Spin7Profile) {
  const auto classes = valence_profile(spin7());
  ASSERT_EQ(classes.size(), 1u);
  EXPECT_EQ(classes[0].count, 14u);
  EXPECT_EQ(to_string(classes[0].profile), "{d1:0, d2:12, d3:0, d4:1}");
}

TEST(Graph, Omega10TwoClasses) {
  const auto classes = valence_profile(build_omega10());
  ASSERT_EQ(classes.size(), 2u);
  EXPECT_EQ(classes[0].count, 40u);
  EXPECT_EQ(to_string(classes[0].profile), "{d1:4, d2:24, d3:16, d4:5, d5:0, d6:0}");
  EXPECT_EQ(classes[1].count, 10u);
  EXPECT_EQ(to_string(classes[1].profile), "{d1:0, d2:30, d3:16, d4:3, d5:0, d6:0}");
}

// Profiles in each class sum to |V| - 1.
TEST(Graph, ProfilesSumToVertexCount) {
  for (const auto& name : catalog_names()) {
    const Form f = catalog(name);
    for (const auto& pc : valence_profile(f)) {
      std::size_t s = 0;
      for (const auto& [d, n] : pc.profile) s += n;
      EXPECT_EQ(s, f.weight() - 1) << name;
    }
  }
}
