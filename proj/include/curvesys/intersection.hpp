#pragma once

#include <vector>

#include "curvesys/holonomy.hpp"
#include "json.hpp"

namespace curvesys {

struct OrbitWitness {
  Word element;  // g with axis(c1) crossing g.axis(c2)
  Pointd point;  // crossing point inside the base polygon
};

struct IntersectionResult {
  int count = 0;
  bool certified = false;
  double radius_used = 0;
  std::vector<OrbitWitness> witnesses;
};

/// 4 (l1 + l2 + diam), diam = largest distance between the side midpoints of the base polygon.
double default_radius(const HolonomyRep& rep, const CurveClass& c1, const CurveClass& c2);
double polygon_diameter(const HolonomyRep& rep);

/// Crossings of lifts inside the base polygon. A crossing on a side counts only on the source
/// side of its pair, so every point of the surface is seen once. Lifts of c1 are visited in
/// order along the curve until their accumulated length passes `radius`; the count is
/// certified when the whole period fits and the count at 1.5 * radius agrees.
/// `radius` <= 0 selects default_radius.
IntersectionResult intersection_number(const HolonomyRep& rep, const CurveClass& c1, const CurveClass& c2,
                                       double radius = 0);
IntersectionResult self_intersection(const HolonomyRep& rep, const CurveClass& cls, double radius = 0);

bool is_simple(const HolonomyRep& rep, const CurveClass& cls);

/// Mod-2 intersection pairing of two loops from their letter parities.
int parity_pairing(const HolonomyRep& rep, const Word& w1, const Word& w2);

void to_json(nlohmann::json& j, const IntersectionResult& r);

}  // namespace curvesys
