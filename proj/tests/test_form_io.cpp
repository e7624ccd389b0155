#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "matryoshka.hpp"

using namespace matryoshka;

namespace {

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int parse_error_line(const std::string& text) {
  try {
    parse_form(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return -1;
}

}  // namespace

TEST(Fixtures, EveryFormFileRoundTrips) {
  std::size_t count = 0;
  for (const auto& entry : std::filesystem::directory_iterator(MATRYOSHKA_FIXTURES)) {
    if (entry.path().extension() != ".form") continue;
    const std::string text = slurp(entry.path());
    EXPECT_EQ(serialize_form(parse_form(text)), text) << entry.path();
    ++count;
  }
  EXPECT_GE(count, catalog_names().size());
}

TEST(Fixtures, CatalogFormsMatchFixtureFiles) {
  for (const auto& name : catalog_names())
    EXPECT_EQ(read_form_file(std::string(MATRYOSHKA_FIXTURES) + "/" + name + ".form"), catalog(name)) << name;
}

TEST(Parse, CommentsAndBlankLines) {
  const Form f = parse_form("# g2 seed\n\ndim 7\ndeg 3\n+1 1 2 7   # the only seed\n");
  EXPECT_EQ(f.weight(), 1u);
  EXPECT_EQ(f.coefficient(IndexTuple{1, 2, 7}), 1);
}

TEST(Parse, ErrorsCarryLineNumbers) {
  EXPECT_EQ(parse_error_line("dim 4\ndeg 2\n+1 1 2\n1 3 4\n"), 4);
  EXPECT_EQ(parse_error_line("dim 4\ndeg 2\n+1 2 1\n"), 3);
  EXPECT_EQ(parse_error_line("dim 4\ndeg 2\n+1 1 5\n"), 3);
  EXPECT_EQ(parse_error_line("dim 4\ndeg 2\n+1 1 2\n-1 1 2\n"), 4);
  EXPECT_EQ(parse_error_line("dim 4\n+1 1 2\n"), 2);
  EXPECT_EQ(parse_error_line("dim 4\ndeg 2\n+1 1 2 3\n"), 3);
  EXPECT_EQ(parse_error_line("dim 4\ndeg 2\n+0 1 2\n"), 3);
  EXPECT_EQ(parse_error_line("dim x\n"), 1);
  EXPECT_EQ(parse_error_line("dim 4\ndeg 2\n+1 1 2\ndim 4\n"), 4);
}

TEST(Serialize, ZeroTenNotation) {
  const std::string text = serialize_form(build_omega10(), true);
  EXPECT_NE(text.find("+1 1 2 3 4 9 0\n"), std::string::npos);
  EXPECT_EQ(text.find(" 10", text.find("deg")), std::string::npos);
  EXPECT_EQ(text.substr(0, 7), "dim 10\n");
}

TEST(Serialize, CoefficientsKeepExplicitSign) {
  EXPECT_EQ(coefficient_string(3), "+3");
  EXPECT_EQ(coefficient_string(-12), "-12");
}
