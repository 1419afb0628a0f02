#include "doctest.h"

#include "curvesys/chord_oracle.hpp"
#include "curvesys/intersection.hpp"
#include "curvesys/system.hpp"

using namespace curvesys;

namespace {
CurveClass loop(const HolonomyRep& rep, const char* w) { return CurveClass::loop(rep.parse(w)); }
int count(const HolonomyRep& rep, const CurveClass& a, const CurveClass& b) {
  const IntersectionResult r = intersection_number(rep, a, b);
  REQUIRE(r.certified);
  return r.count;
}
}  // namespace

TEST_CASE("torus generators meet once") {
  const HolonomyRep rep = build_holonomy(parse_surface("S:1,1"));
  const IntersectionResult r = intersection_number(rep, loop(rep, "a"), loop(rep, "b"));
  CHECK(r.certified);
  CHECK(r.count == 1);
  CHECK(r.witnesses.size() == 1);
  CHECK(chord_oracle(rep.polygon_word, rep.parse("a"), rep.parse("b")) == 1);
}

TEST_CASE("same class after canonicalization") {
  const HolonomyRep rep = build_holonomy(parse_surface("S:1,1"));
  try {
    intersection_number(rep, loop(rep, "a"), loop(rep, "aba^-1b^-1 a bab^-1a^-1"));
    FAIL("expected SameClass");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::same_class);
  }
}

TEST_CASE("arcs sharing a polygon vertex are disjoint") {
  const SurfaceSig sig = parse_surface("S:0,3");
  const HolonomyRep rep = build_holonomy(sig);
  const CurveSystem sys = construct_arc_polygon(sig);
  int pairs = 0;
  for (std::size_t i = 0; i < sys.size(); ++i)
    for (std::size_t j = i + 1; j < sys.size(); ++j) {
      const CurveClass &a = sys.members[i], &b = sys.members[j];
      if (!a.word.empty() || !b.word.empty()) continue;
      if (a.start != b.start && a.start != b.end && a.end != b.start && a.end != b.end) continue;
      CHECK(count(rep, a, b) == 0);
      ++pairs;
    }
  CHECK(pairs > 0);
  // the two diagonals of the square cross
  CHECK(count(rep, parse_curve(rep, "0::2"), parse_curve(rep, "1::3")) == 1);
}

TEST_CASE("self intersection") {
  const HolonomyRep rep = build_holonomy(parse_surface("S:1,1"));
  CHECK(self_intersection(rep, loop(rep, "a")).count == 0);
  // a^2 b is primitive and simple; a^2 b^2 lies in a non-primitive homology class
  CHECK(self_intersection(rep, loop(rep, "aab")).count == 0);
  CHECK(self_intersection(rep, loop(rep, "aabb")).count >= 1);
  CHECK(chord_oracle_self(rep.polygon_word, rep.parse("aabb")) >= 1);
  const HolonomyRep n12 = build_holonomy(parse_surface("N:1,2"));
  CHECK(self_intersection(n12, loop(n12, "μ")).count == 0);
}

TEST_CASE("chord oracle basics") {
  const HolonomyRep rep = build_holonomy(parse_surface("S:1,1"));
  CHECK(chord_oracle(rep.polygon_word, rep.parse("a"), rep.parse("a")) == 0);
  const HolonomyRep n12 = build_holonomy(parse_surface("N:1,2"));
  const int oracle = chord_oracle(n12.polygon_word, n12.parse("m1"), n12.parse("m1d1"));
  CHECK(oracle == 1);
  CHECK(count(n12, loop(n12, "m1"), loop(n12, "m1d1")) == oracle);
}

TEST_CASE("symmetry, conjugacy and parity on small words") {
  const HolonomyRep rep = build_holonomy(parse_surface("N:1,3"));
  const std::vector<const char*> words = {"m1", "m1d1", "m1d2", "d1d2^-1", "m1m1d1", "m1d1d2", "m1m1d2^-1"};
  for (std::size_t i = 0; i < words.size(); ++i)
    for (std::size_t j = i + 1; j < words.size(); ++j) {
      const CurveClass a = loop(rep, words[i]), b = loop(rep, words[j]);
      const int ab = count(rep, a, b);
      CHECK(ab == count(rep, b, a));
      const CurveClass conj = CurveClass::loop(concat(concat(rep.parse("d1"), a.word), rep.parse("D1")));
      CHECK(ab == count(rep, conj, b));
      const int par = parity_pairing(rep, a.word, b.word);
      CHECK(ab >= par);
      CHECK((ab - par) % 2 == 0);
    }
}

TEST_CASE("radius contract") {
  const HolonomyRep rep = build_holonomy(parse_surface("S:1,1"));
  const IntersectionResult tiny = intersection_number(rep, loop(rep, "ab"), loop(rep, "aab"), 1e-3);
  CHECK_FALSE(tiny.certified);
  const IntersectionResult full = intersection_number(rep, loop(rep, "ab"), loop(rep, "aab"));
  CHECK(full.certified);
  CHECK(full.count == 1);
}
