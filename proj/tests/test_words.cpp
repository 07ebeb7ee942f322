#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "msg/words.hpp"

using namespace msg;

static const std::vector<std::string> kXYZ = {"x", "y", "z"};

TEST_CASE("single letters and inverses") {
  Word w = parse_word("x*y^-1", kXYZ);
  REQUIRE(w.size() == 2);
  CHECK(w[0] == Letter{0, +1});
  CHECK(w[1] == Letter{1, -1});
}

TEST_CASE("parenthesized powers expand") {
  Word w = parse_word("(x*z)^3", kXYZ);
  REQUIRE(w.size() == 6);
  for (size_t i = 0; i < 6; ++i) {
    CHECK(w[i].gen == (i % 2 == 0 ? 0 : 2));
    CHECK(w[i].sign == +1);
  }
}

TEST_CASE("free reduction during parse") {
  Word w = parse_word("x*x^-1*y", kXYZ);
  REQUIRE(w.size() == 1);
  CHECK(w[0] == Letter{1, +1});
}

TEST_CASE("identity forms") {
  CHECK(parse_word("1", kXYZ).empty());
  CHECK(parse_word("x^0", kXYZ).empty());
  CHECK(parse_word("(x*y)^0", kXYZ).empty());
  CHECK(parse_word("(x*x^-1)^5", kXYZ).empty());
  CHECK(print_word({}, kXYZ) == "1");
}

TEST_CASE("negative powers") {
  Word w = parse_word("(x*z)^-2", kXYZ);
  Word m = parse_word("z^-1*x^-1*z^-1*x^-1", kXYZ);
  CHECK(w == m);
}

TEST_CASE("whitespace and comments are insignificant") {
  Word a = parse_word("  x *\t y^-1 # trailing comment", kXYZ);
  Word b = parse_word("x*y^-1", kXYZ);
  CHECK(a == b);
}

TEST_CASE("syntax errors") {
  CHECK_THROWS_AS(parse_word("x*", kXYZ), SyntaxError);
  CHECK_THROWS_AS(parse_word("(x*y", kXYZ), SyntaxError);
  CHECK_THROWS_AS(parse_word("x^", kXYZ), SyntaxError);
  CHECK_THROWS_AS(parse_word("x**y", kXYZ), SyntaxError);
  CHECK_THROWS_AS(parse_word("w", kXYZ), UnknownGenerator);
  CHECK_THROWS_AS(parse_word("", kXYZ), SyntaxError);
}

TEST_CASE("invert and concat") {
  Word w = parse_word("x*y^-1*z", kXYZ);
  CHECK(invert(invert(w)) == w);
  CHECK(concat(w, invert(w)).empty());
  CHECK(concat(invert(w), w).empty());
}

TEST_CASE("print round trip") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    Word w;
    for (int i = 0; i < 12; ++i)
      w = concat(w, {Letter{(int)(rng() % 3), rng() % 2 ? +1 : -1}});
    CHECK(parse_word(print_word(w, kXYZ), kXYZ) == w);
  }
}

TEST_CASE("reduction is confluent under cancelling-pair insertion") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    Word w;
    for (int i = 0; i < 10; ++i)
      w = concat(w, {Letter{(int)(rng() % 3), rng() % 2 ? +1 : -1}});
    // splice g*g^-1 into an arbitrary position of the unreduced spelling
    Word padded;
    size_t cut = rng() % (w.size() + 1);
    padded.insert(padded.end(), w.begin(), w.begin() + cut);
    int g = (int)(rng() % 3);
    int s = rng() % 2 ? +1 : -1;
    padded.push_back({g, s});
    padded.push_back({g, -s});
    padded.insert(padded.end(), w.begin() + cut, w.end());
    CHECK(reduce(padded) == w);
  }
}

static const char* kPresO28 = R"(
# binary icosahedral times Z2
generators: x, y, z
relators:
x^5
y^2
z^2
(x*z)^3
(x*y)^2
(y*z^-1)^2
)";

TEST_CASE("presentation file parsing") {
  Presentation p = parse_presentation(kPresO28);
  REQUIRE(p.generators == std::vector<std::string>{"x", "y", "z"});
  REQUIRE(p.relators.size() == 6);
  CHECK(p.relators[0] == parse_word("x^5", p.generators));
  CHECK(p.relators[5] == parse_word("(y*z^-1)^2", p.generators));
  CHECK(p.gen_index("z") == 2);
  CHECK_THROWS_AS(p.gen_index("w"), UnknownGenerator);
}

TEST_CASE("presentation errors") {
  CHECK_THROWS_AS(parse_presentation("generators: x, x\nrelators:\n"),
                  DuplicateGenerator);
  CHECK_THROWS_AS(parse_presentation("relators:\nx^2\n"), SyntaxError);
  CHECK_THROWS_AS(parse_presentation("generators: x\n"), SyntaxError);
  CHECK_THROWS_AS(parse_presentation("generators: x\nrelators:\ny^2\n"),
                  UnknownGenerator);
}

TEST_CASE("subgroup spec parsing") {
  Presentation p = parse_presentation(kPresO28);
  SubgroupSpec s = parse_subgroup("x*y; (x*z)^3 ; 1", p);
  REQUIRE(s.size() == 3);
  CHECK(s[2].empty());
  CHECK(parse_subgroup("", p).empty());
  CHECK(parse_subgroup(" ; ", p).empty());
}
