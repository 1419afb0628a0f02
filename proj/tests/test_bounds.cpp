#include "doctest.h"

#include "curvesys/bounds.hpp"
#include "curvesys/error.hpp"

using namespace curvesys;

TEST_CASE("thm4") {
  CHECK(thm4_exact(1) == 4);
  CHECK(thm4_exact(2) == 12);
  CHECK(thm4_exact(3) == 24);
}

TEST_CASE("thm1 and cor1") {
  CHECK(thm1_lower(8, 1, 1) == 33);
  CHECK(thm1_lower(3, 0, 3) == 3);
  CHECK(thm1_lower(1, 3, 0) == 4);
  CHECK_THROWS_AS(thm1_lower(4, 1, 4), Error);
  CHECK(cor1_lower(1, 3) == 4);
  CHECK(cor1_lower(8, 1) == 36);
  CHECK(cor1_lower(2, 0) == 2);
}

TEST_CASE("thm5") {
  CHECK(thm5_lower(7, 2) == 86);
  CHECK(thm5_lower(2, 1) == 3);
  CHECK(thm5_lower(1, 4) == 7);
  for (int c = 1; c <= 12; ++c)
    for (int n = 0; n <= 12; ++n)
      if (2 - c - n < 0) CHECK(thm5_lower(c, n) == thm5_polynomial(c, n));
}

TEST_CASE("thm2") {
  CHECK(thm2_upper(1, 4) == 7);
  CHECK(thm2_upper(2, 3) == 23);
  CHECK(thm2_upper(3, 1) == 13);
}

TEST_CASE("misc values") {
  CHECK(misc_value("prop1", "2") == 5);
  CHECK(misc_value("nonhyp", "N:2,0") == 2);
  CHECK(misc_value("cor2", "2") == 2);
  CHECK(misc_value("prop2", "1") == 4);
  CHECK(misc_value("lemma1", "2") == 4);
  CHECK(misc_value("thm6", "2") == 3);
  CHECK_THROWS_AS(misc_value("nope", "1"), Error);
}

TEST_CASE("consistency report") {
  const ConsistencyReport r = consistency_report(6, 6);
  CHECK(r.violations.empty());
  CHECK(r.checks > 0);
  for (const auto& row : r.rows) {
    if (row.c == 1 && row.thm2) CHECK(row.cor1 == *row.thm2);
    if (row.c == 3 && row.n == 0) {
      CHECK(row.cor1 == 4);
      REQUIRE(row.thm2);
      CHECK(*row.thm2 == 5);
    }
  }
}

TEST_CASE("bounds_for keeps families apart") {
  const auto entries = bounds_for(parse_surface("N:1,3"));
  bool arcs = false, complete = false;
  for (const auto& e : entries) {
    if (e.family == "arcs" && e.name == "thm4") arcs = e.value == 12;
    if (e.family == "complete_loops" && e.name == "thm2") complete = e.value == 4 && e.kind == BoundKind::exact;
  }
  CHECK(arcs);
  CHECK(complete);
}
