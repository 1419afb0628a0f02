#include "doctest.h"

#include "curvesys/error.hpp"
#include "curvesys/surface.hpp"
#include "curvesys/word.hpp"

using namespace curvesys;

TEST_CASE("euler characteristic") {
  CHECK(euler_char(parse_surface("S:0,3")) == -1);
  CHECK(euler_char(parse_surface("N:7,2")) == -7);
  CHECK(euler_char(parse_surface("S:2,4")) == -6);
  CHECK(abs_euler_char(parse_surface("N:1,3")) == 2);
}

TEST_CASE("surface grammar round trip") {
  for (const char* s : {"S:0,3", "N:8,1", "S:2,1", "N:1,2"}) CHECK(format_surface(parse_surface(s)) == s);
  CHECK_THROWS_AS(parse_surface("X:1,1"), Error);
  CHECK_THROWS_AS(parse_surface("N:0,2"), Error);
}

TEST_CASE("cutting along a one-sided loop") {
  auto one = [](const char* s) {
    std::vector<std::string> out;
    for (const auto& r : cut_along(parse_surface(s), LoopKind::one_sided)) out.push_back(format_surface(r.surface));
    return out;
  };
  CHECK(one("N:1,4") == std::vector<std::string>{"S:0,5"});
  CHECK(one("N:2,3") == std::vector<std::string>{"N:1,4"});
  const auto three = one("N:3,1");
  REQUIRE(three.size() == 2);
  CHECK(std::find(three.begin(), three.end(), "N:2,2") != three.end());
  CHECK(std::find(three.begin(), three.end(), "S:1,2") != three.end());
  CHECK_THROWS_AS(cut_along(parse_surface("S:1,1"), LoopKind::one_sided), Error);
}

TEST_CASE("orientation double cover") {
  CHECK(format_surface(orientation_double_cover(parse_surface("N:1,4"))) == "S:0,8");
  CHECK(format_surface(orientation_double_cover(parse_surface("N:1,1"))) == "S:0,2");
  const SurfaceSig cover = orientation_double_cover(parse_surface("N:3,2"));
  CHECK(format_surface(cover) == "S:2,4");
  CHECK(euler_char(cover) == 2 * euler_char(parse_surface("N:3,2")));
}

TEST_CASE("cyclic word canonical form") {
  const std::vector<std::string> names{"a1", "b1"};
  const Word w = parse_word("abAB", names);
  CHECK(canonical_cyclic(w) == canonical_cyclic(rotate(w, 1)));
  CHECK(canonical_cyclic(w) == canonical_cyclic(inverse(w)));
  CHECK(cyclic_reduce(parse_word("bab^-1", names)) == parse_word("a", names));
  CHECK(is_proper_power(parse_word("abab", names)));
  CHECK_FALSE(is_proper_power(parse_word("aab", names)));
  CHECK(format_word(parse_word("a b^-1", names), names) == "a1B1");
}
