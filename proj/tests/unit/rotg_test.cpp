#include <gtest/gtest.h>

#include "d2tk/error.hpp"
#include "d2tk/gen.hpp"
#include "d2tk/rotg.hpp"

using namespace d2tk;

namespace {

int error_line(const std::string& text) {
  try {
    parse_rotg_string(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return -1;
}

}  // namespace

TEST(Rotg, RoundTrip) {
  for (const auto& name : fixture_names()) {
    PlaneGraph g = fixture(name);
    std::string text = to_rotg(g);
    EXPECT_EQ(to_rotg(parse_rotg_string(text)), text) << name;
  }
}

TEST(Rotg, CommentsAndBlankLines) {
  PlaneGraph g = parse_rotg_string("# triangle\n3 3\n\n0: 1 2  # first\n1: 2 0\n2: 0 1\n");
  EXPECT_EQ(g.num_edges(), 3);
  EXPECT_EQ(g.num_faces(), 2);
}

TEST(Rotg, RejectsTrailingJunk) {
  EXPECT_EQ(error_line("3 3\n0: 1 2\n1: 2 0\n2: 0 1\nextra\n"), 5);
  EXPECT_EQ(error_line("3 3\n0: 1 2\n1: 0 2 x\n2: 0 1\n"), 3);
  EXPECT_EQ(error_line("3 3 9\n0: 1 2\n1: 2 0\n2: 0 1\n"), 1);
}

TEST(Rotg, HeaderMustMatch) {
  EXPECT_NE(error_line("3 4\n0: 1 2\n1: 2 0\n2: 0 1\n"), -1);
  EXPECT_NE(error_line("4 3\n0: 1 2\n1: 2 0\n2: 0 1\n"), -1);
}

TEST(Rotg, ConstructorErrorsSurface) {
  try {
    parse_rotg_string("3 2\n0: 1 2\n1: 0\n2: 1\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::AsymmetricAdjacency);
  }
}

TEST(Rotg, ReadsTestData) {
  PlaneGraph g = read_rotg_file(std::string(D2TK_TEST_DATA) + "/w6.rotg");
  EXPECT_EQ(to_rotg(g), to_rotg(fixture("W6")));
  EXPECT_THROW(read_rotg_file(std::string(D2TK_TEST_DATA) + "/bad_line3.rotg"), ParseError);
}
