#include "doctest.h"

#include "curvesys/hyperbolic.hpp"

using namespace curvesys;

namespace {
// phi(inf) = 0, phi(1) = 2c for the lasso maps
Mobiusd lasso_map(double t, double c, bool reversing) { return Mobiusd::from_coeffs(0, 2 * c * (1 + t), 1, t, reversing); }
}  // namespace

TEST_CASE("apply") {
  const Mobiusd phi = lasso_map(-10, 1, false);
  CHECK(phi.apply(IdealPointd::infinity()).value() == doctest::Approx(0).epsilon(1e-15));
  CHECK(phi.apply(IdealPointd::real(1)).value() == doctest::Approx(2).epsilon(1e-12));
  const Pointd i(0, 1);
  CHECK(std::abs(Mobiusd().apply(i) - i) < 1e-15);
}

TEST_CASE("compose") {
  const Mobiusd r = lasso_map(1, 1, true);
  CHECK_FALSE((r * r).reversing());
  const Mobiusd m = Mobiusd::from_coeffs(2, 1, 3, 2, false);
  CHECK((m * m.inverse()).is_identity(1e-12));
  CHECK((r * r.inverse()).is_identity(1e-12));
}

TEST_CASE("classify") {
  CHECK(Mobiusd::from_coeffs(1, 1, 0, 1, false).classify() == IsometryType::parabolic);
  CHECK(Mobiusd::from_coeffs(2, 0, 0, 1, false).classify() == IsometryType::hyperbolic);
  const Mobiusd g = lasso_map(1, 1, true);
  CHECK(g.classify() == IsometryType::glide_reflection);
  CHECK(std::abs((g * g).trace()) > 2);
  CHECK_THROWS_AS(Mobiusd().classify(), Error);
}

TEST_CASE("geodesic intersection") {
  auto p = geodesic_intersection<double>({IdealPointd::real(0), IdealPointd::infinity()},
                                         {IdealPointd::real(-1), IdealPointd::real(1)});
  REQUIRE(p);
  CHECK(std::abs(*p - Pointd(0, 1)) < 1e-12);
  CHECK_FALSE(geodesic_intersection<double>({IdealPointd::real(0), IdealPointd::real(1)},
                                            {IdealPointd::real(2), IdealPointd::real(3)}));
  // Re z = 1 against the circle through 0 and 2c with c = 1: y0 = sqrt(2c - 1)
  auto q = geodesic_intersection<double>({IdealPointd::infinity(), IdealPointd::real(1)},
                                         {IdealPointd::real(0), IdealPointd::real(2)});
  REQUIRE(q);
  CHECK(std::abs(*q - Pointd(1, 1)) < 1e-12);
}

TEST_CASE("interleave") {
  auto r = [](double x) { return IdealPointd::real(x); };
  CHECK(interleave(r(0), r(2), r(1), r(3)) == Crossing::cross);
  CHECK(interleave(r(0), r(1), r(2), r(3)) == Crossing::disjoint);
  CHECK(interleave(r(0), r(1), r(1), r(3)) == Crossing::tie);
  CHECK(interleave(r(-1), IdealPointd::infinity(), r(0), r(1)) == Crossing::disjoint);
}

TEST_CASE("axis endpoints and frames") {
  const Mobiusd d = Mobiusd::from_coeffs(2, 0, 0, 0.5, false);
  const auto [rep, att] = d.axis_endpoints();
  CHECK(rep.value() == doctest::Approx(0).epsilon(1e-15));
  CHECK(att.is_infinity());
  GeodesicFrame<double> f({IdealPointd::real(0), IdealPointd::infinity()});
  CHECK(f.param(Pointd(0, std::exp(1.5))) == doctest::Approx(1.5));
  CHECK(distance(Pointd(0, 1), Pointd(0, std::exp(2.0))) == doctest::Approx(2));
}
