#include "doctest.h"

#include <regex>

#include "curvesys/bounds.hpp"
#include "curvesys/intersection.hpp"
#include "curvesys/system.hpp"

using namespace curvesys;

namespace {
CurveSystem checked(const CurveSystem& s, bool complete = true) {
  return validate(build_holonomy(s.surface), s, 1, complete);
}
std::size_t occurrences(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto p = text.find(needle); p != std::string::npos; p = text.find(needle, p + 1)) ++n;
  return n;
}
}  // namespace

TEST_CASE("validate") {
  const CurveSystem prop1 = checked(construct_prop1(1, 1));
  CHECK(prop1.size() == 3);
  CHECK(prop1.validation.state == ValidationState::valid_complete_k_system);

  const HolonomyRep s11 = build_holonomy(parse_surface("S:1,1"));
  const CurveSystem bad = validate(s11, system_from_words(s11, SystemKind::loops, {"a", "aa"}));
  CHECK(bad.validation.state == ValidationState::invalid);
  CHECK(bad.validation.reason == "non-primitive member");

  const CurveSystem arcs = checked(construct_arc_polygon(parse_surface("S:0,3")), false);
  CHECK(arcs.size() == 4);
  CHECK(arcs.validation.state == ValidationState::valid_k_system);
  REQUIRE(arcs.pairwise);
  CHECK(arcs.pairwise->maxCoeff() == 1);
}

TEST_CASE("validate rejects non-simple and out-of-alphabet members") {
  const HolonomyRep s11 = build_holonomy(parse_surface("S:1,1"));
  const CurveSystem ns = validate(s11, system_from_words(s11, SystemKind::loops, {"a", "aabb"}), 1, false);
  CHECK(ns.validation.state == ValidationState::invalid);
  CurveSystem foreign = system_from_words(s11, SystemKind::loops, {"a"});
  foreign.members.push_back(CurveClass::loop({letter_of(5)}));
  CHECK_THROWS_AS(validate(s11, foreign), Error);
}

TEST_CASE("prop1") {
  CHECK(construct_prop1(2, 1).size() == 5);
  CHECK(checked(construct_prop1(2, 1)).validation.state == ValidationState::valid_complete_k_system);
  CHECK_THROWS_AS(construct_prop1(0, 1), Error);
}

TEST_CASE("thm1") {
  CHECK(construct_thm1(8, 1, 1).size() == 33);
  CHECK(construct_thm1(1, 3, 0).size() == 4);
  const CurveSystem s = checked(construct_thm1(3, 1, 2));
  CHECK(s.size() == 6);
  CHECK(s.validation.state == ValidationState::valid_complete_k_system);
  const HolonomyRep rep = build_holonomy(s.surface);
  int two = 0;
  for (const auto& m : s.members) two += sidedness(rep, m) == Sidedness::two_sided;
  CHECK(two == 2);
  CHECK_THROWS_AS(construct_thm1(4, 1, 4), Error);
  CHECK_THROWS_AS(construct_thm1(3, 1, -1), Error);
  // t = c with c odd: c two-sided loops
  const CurveSystem odd = checked(construct_thm1(3, 1, 3));
  CHECK(odd.size() == 3);
  CHECK(odd.validation.state == ValidationState::valid_complete_k_system);
}

TEST_CASE("thm5") {
  CHECK(construct_thm5(7, 2).size() == 86);
  CHECK(construct_thm5(2, 1).size() == 3);
  const CurveSystem s = checked(construct_thm5(1, 3), false);
  CHECK(s.size() == 4);
  CHECK(s.validation.state != ValidationState::invalid);
  CHECK(checked(construct_thm5(3, 2), false).validation.state != ValidationState::invalid);
}

TEST_CASE("arc polygon") {
  CHECK(construct_arc_polygon(parse_surface("S:0,3")).size() == 4);
  CHECK(construct_arc_polygon(parse_surface("N:1,2")).size() == 4);
  CHECK(construct_arc_polygon(parse_surface("S:1,1")).size() == 4);
  CHECK(construct_arc_polygon(parse_surface("N:2,2")).size() == 12);
  CHECK_THROWS_AS(construct_arc_polygon(parse_surface("S:1,0")), Error);
}

TEST_CASE("search") {
  SearchOptions o;
  o.max_word_len = 6;
  const SearchCertificate n12 = search_max(build_holonomy(parse_surface("N:1,2")), o);
  CHECK(n12.exhaustive);
  CHECK(n12.best.size() == 2);
  const SearchCertificate s11 = search_max(build_holonomy(parse_surface("S:1,1")), o);
  CHECK(s11.exhaustive);
  CHECK(s11.best.size() == 3);
  CHECK(s11.best.validation.state == ValidationState::valid_complete_k_system);
}

TEST_CASE("search budget stops without throwing") {
  SearchOptions o;
  o.max_word_len = 6;
  o.node_budget = 1;
  const SearchCertificate c = search_max(build_holonomy(parse_surface("S:1,1")), o);
  CHECK_FALSE(c.exhaustive);
}

TEST_CASE("svg export") {
  const std::string big = export_svg(construct_thm1(8, 1, 1));
  CHECK(occurrences(big, "<polyline class=\"curve\"") == 33);
  CHECK(occurrences(big, "class=\"crosscap\"") == 8);
  CHECK(occurrences(big, "class=\"hole\"") == 1);
  CurveSystem empty;
  empty.surface = parse_surface("N:1,2");
  const std::string e = export_svg(empty);
  CHECK(e.rfind("<svg", 0) == 0);
  CHECK(occurrences(e, "class=\"curve\"") == 0);
  const std::string oct = export_svg(construct_prop1(2, 1));
  CHECK(occurrences(oct, "class=\"curve\"") == 5);
  CHECK(occurrences(oct, "<polygon class=\"frame\"") == 1);
  CHECK(export_svg(construct_thm1(8, 1, 1)) == big);
  CurveSystem bare = construct_thm1(3, 1, 1);
  bare.chords.reset();
  CHECK_THROWS_AS(export_svg(bare), Error);
}

TEST_CASE("json round trip") {
  const CurveSystem s = checked(construct_thm1(3, 1, 1));
  const nlohmann::json j = system_to_json(s);
  const CurveSystem back = system_from_json(j);
  CHECK(back.members == s.members);
  CHECK(back.validation.state == s.validation.state);
  CHECK(system_to_json(back) == j);
  const CurveSystem arcs = construct_arc_polygon(parse_surface("N:1,2"));
  CHECK(system_from_json(system_to_json(arcs)).members == arcs.members);
}
