#include "doctest.h"

#include <random>

#include "curvesys/nib.hpp"

using namespace curvesys;

namespace {
struct Fixture {
  HolonomyRep rep;
  CurveSystem arcs;
  explicit Fixture(const char* s) : rep(build_holonomy(parse_surface(s))) {
    arcs = validate(rep, construct_arc_polygon(parse_surface(s)), 1, false);
  }
};
}  // namespace

TEST_CASE("tips") {
  for (const char* s : {"S:0,3", "N:1,2", "S:1,1", "N:1,3", "S:0,4", "N:2,1"}) {
    Fixture f(s);
    CHECK(tips_of(f.rep, f.arcs).size() == 2 * f.arcs.size());
  }
  Fixture f("N:1,2");
  CurveSystem one = f.arcs;
  // keep a single arc between the two cusps
  one.members.clear();
  for (const auto& a : f.arcs.members)
    if (f.rep.vertex_cusp[a.start] != f.rep.vertex_cusp[a.end]) {
      one.members.push_back(a);
      break;
    }
  REQUIRE(one.members.size() == 1);
  one.pairwise.reset();
  CHECK(tips_of(f.rep, one).size() == 2);
  CurveSystem empty = f.arcs;
  empty.members.clear();
  CHECK_THROWS_AS(tips_of(f.rep, empty), Error);
}

TEST_CASE("slits embed; corrupted control does not") {
  for (const char* s : {"S:0,3", "N:1,2"}) {
    Fixture f(s);
    const auto nibs = tips_of(f.rep, f.arcs);
    for (std::size_t i = 0; i < nibs.size(); ++i) CHECK(slit_embedding_check(f.rep, nibs[i], 50, i).violations == 0);
    const Word bad = concat(power(Word{letter_of(0)}, 2), power(Word{letter_of(1)}, 2));
    CHECK(slit_embedding_check(f.rep, nibs[0], 50, 1, &bad).violations > 0);
  }
}

TEST_CASE("preimage counts") {
  for (const char* s : {"S:0,3", "N:1,2"}) {
    Fixture f(s);
    const auto nibs = tips_of(f.rep, f.arcs);
    std::mt19937_64 rng(5);
    for (int i = 0; i < 50; ++i) {
      const Pointd p = sample_thick_point(f.rep, rng);
      const int n = preimage_count(f.rep, nibs, p);
      CHECK(n <= 4);
      CHECK(n >= 1);
      CHECK(lemma3_check(f.rep, nibs, p).violations == 0);
    }
    // a nib list that misses the point gives zero
    CHECK(preimage_count(f.rep, {}, Pointd(0.5, 0.8)) == 0);
  }
}
