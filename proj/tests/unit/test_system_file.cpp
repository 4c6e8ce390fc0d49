#include <gtest/gtest.h>

#include <filesystem>

#include "diffelim/error.hpp"
#include "support.hpp"

using namespace diffelim;
using testing_support::Ring;

TEST(ParseSystem, HeadersAndEquations) {
  DiffSystem S = parse_system(
      "# comment\n"
      "vars x, y; keep z\n"
      "params a\n"
      "x' = a*y^2 + z  # trailing\n"
      "y'' - x^(3) = 1/2\n");
  EXPECT_EQ(S.eliminate, (std::vector<std::string>{"x", "y"}));
  EXPECT_EQ(S.keep, (std::vector<std::string>{"z"}));
  EXPECT_EQ(S.params, (std::vector<std::string>{"a"}));
  ASSERT_EQ(S.equations.size(), 2u);
  Ring R({"x", "y", "z", "a"});
  EXPECT_EQ(transport(S.equations[0], R.reg), R.parse("x' - a*y^2 - z"));
  EXPECT_EQ(transport(S.equations[1], R.reg), R.parse("y'' - x''' - 0.5"));
}

TEST(ParseSystem, Arithmetic) {
  Ring R({"x"});
  EXPECT_EQ(R.parse("(x + 1)^2"), R.parse("x^2 + 2*x + 1"));
  EXPECT_EQ(R.parse("-x*-x"), R.parse("x^2"));
  EXPECT_EQ(R.parse("x/4"), R.parse("0.25*x"));
  EXPECT_EQ(R.parse("x'^2"), R.parse("x'*x'"));
}

TEST(ParseSystem, Errors) {
  EXPECT_THROW(parse_system("vars x\nx + q"), ParseError);
  EXPECT_THROW(parse_system("vars x\nx +"), ParseError);
  EXPECT_THROW(parse_system("vars x\n(x"), ParseError);
  EXPECT_THROW(parse_system("vars x\nx / x"), ParseError);
  EXPECT_THROW(parse_system("vars x\nx = = 1"), ParseError);
  EXPECT_THROW(parse_system("vars x; keep x\nx"), Error);
  EXPECT_THROW(parse_system("vars x\nparams a\nx - a'"), Error);
  try {
    parse_system("vars x\n\nx + q\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find('3'), std::string::npos) << e.what();
  }
}

TEST(SystemFile, EveryShippedSystemRoundTrips) {
  int count = 0;
  for (const auto& entry : std::filesystem::directory_iterator(DIFFELIM_SYSTEMS_DIR)) {
    if (entry.path().extension() != ".sys") continue;
    DiffSystem S = load_system(entry.path().string());
    DiffSystem T = parse_system(print_system(S));
    EXPECT_TRUE(same_system(S, T)) << entry.path();
    EXPECT_EQ(print_system(T), print_system(S));
    ++count;
  }
  EXPECT_GE(count, 5);
}

TEST(SystemFile, MissingFileThrows) { EXPECT_THROW(load_system("/nonexistent/file.sys"), Error); }

TEST(WithKeep, RepartitionsDeclaredVariables) {
  DiffSystem S = with_keep(testing_support::system_file("control.sys"), {"x1", "x3"});
  EXPECT_EQ(S.keep, (std::vector<std::string>{"x1", "x3"}));
  EXPECT_EQ(S.eliminate, (std::vector<std::string>{"u1", "u2", "x2"}));
  EXPECT_THROW(with_keep(S, {"nope"}), PreconditionError);
}
