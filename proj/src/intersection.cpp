#include "curvesys/intersection.hpp"

#include <algorithm>
#include <cmath>

#include "curvesys/error.hpp"
#include "curvesys/report.hpp"

namespace curvesys {

namespace {

Pointd side_midpoint(const HolonomyRep& rep, int side) {
  const IdealPointd& u = rep.vertex(side);
  const IdealPointd& v = rep.vertex(side + 1);
  if (u.is_infinity()) return {v.value(), 1.0};
  if (v.is_infinity()) return {u.value(), 1.0};
  return {(u.value() + v.value()) / 2, std::abs(u.value() - v.value()) / 2};
}

bool on_source_side(const HolonomyRep& rep, int side) { return rep.letter_of_side(side) < 0; }

struct Tally {
  int count = 0;
  std::vector<OrbitWitness> witnesses;
  bool complete = false;
};

/// Does lift b cross lift a at a point of the half-open base polygon? Fills the crossing point.
bool crosses_in_polygon(const HolonomyRep& rep, const PLift& a, const PLift& b, Pointd* where) {
  if (interleave(a.line.from, a.line.to, b.line.from, b.line.to) != Crossing::cross) return false;
  GeodesicFrame<double> f(a.line);
  const double s = f.crossing_param(b.line.from, b.line.to);
  if (s < a.s_in - kGeomTol || s > a.s_out + kGeomTol) return false;
  if (a.entry_side >= 0 && s <= a.s_in + kGeomTol && !on_source_side(rep, a.entry_side)) return false;
  if (a.exit_side >= 0 && s >= a.s_out - kGeomTol && !on_source_side(rep, a.exit_side)) return false;
  *where = f.point(s);
  return true;
}

Tally tally(const HolonomyRep& rep, const std::vector<PLift>& l1, const std::vector<PLift>& l2, double radius,
            bool self) {
  Tally t;
  double walked = 0;
  size_t i = 0;
  for (; i < l1.size(); ++i) {
    if (walked > radius) break;
    for (size_t j = self ? i + 1 : 0; j < l2.size(); ++j) {
      Pointd z;
      if (!crosses_in_polygon(rep, l1[i], l2[j], &z)) continue;
      ++t.count;
      t.witnesses.push_back({free_reduce(concat(l1[i].prefix, inverse(l2[j].prefix))), z});
    }
    walked += l1[i].length;
  }
  t.complete = i == l1.size();
  return t;
}

IntersectionResult certify(const HolonomyRep& rep, const std::vector<PLift>& l1, const std::vector<PLift>& l2,
                           double radius, bool self) {
  Tally a = tally(rep, l1, l2, radius, self);
  Tally b = tally(rep, l1, l2, 1.5 * radius, self);
  if (a.count != b.count)
    throw Error(ErrorKind::not_certified, "crossing counts differ between radius " + fmt_num(radius) +
                                              " and " + fmt_num(1.5 * radius));
  IntersectionResult r;
  r.count = a.count;
  r.certified = a.complete;
  r.radius_used = radius;
  r.witnesses = std::move(a.witnesses);
  return r;
}

void require_essential(const HolonomyRep& rep, const CurveClass& c) {
  if (!is_essential(rep, c))
    throw Error(ErrorKind::inessential_input, "curve " + format_curve(rep, c) + " is not essential");
}

}  // namespace

double polygon_diameter(const HolonomyRep& rep) {
  double d = 0;
  for (int i = 0; i < rep.side_count(); ++i)
    for (int j = i + 1; j < rep.side_count(); ++j)
      d = std::max(d, distance(side_midpoint(rep, i), side_midpoint(rep, j)));
  return d;
}

double default_radius(const HolonomyRep& rep, const CurveClass& c1, const CurveClass& c2) {
  return 4 * (geodesic_of(rep, c1).length + geodesic_of(rep, c2).length + polygon_diameter(rep));
}

IntersectionResult intersection_number(const HolonomyRep& rep, const CurveClass& c1, const CurveClass& c2,
                                       double radius) {
  require_essential(rep, c1);
  require_essential(rep, c2);
  const CurveClass k1 = canonicalize(rep, c1), k2 = canonicalize(rep, c2);
  if (k1 == k2) throw Error(ErrorKind::same_class, "both curves are " + format_curve(rep, k1));
  if (radius <= 0) radius = default_radius(rep, c1, c2);
  const bool s1 = is_side_arc(rep, k1), s2 = is_side_arc(rep, k2);
  if (s1 || s2) {
    IntersectionResult r;
    r.certified = true;
    r.radius_used = radius;
    if (!(s1 && s2)) {
      const CurveClass& side = s1 ? k1 : k2;
      const CurveClass& other = s1 ? k2 : k1;
      r.count = side_pair_crossings(rep, other, generator_of(rep.letter_of_side(side.start)));
    }
    return r;
  }
  return certify(rep, p_lifts(rep, c1), p_lifts(rep, c2), radius, false);
}

IntersectionResult self_intersection(const HolonomyRep& rep, const CurveClass& cls, double radius) {
  require_essential(rep, cls);
  if (radius <= 0) radius = default_radius(rep, cls, cls);
  if (is_side_arc(rep, canonicalize(rep, cls))) {
    IntersectionResult r;
    r.certified = true;
    r.radius_used = radius;
    return r;
  }
  const auto lifts = p_lifts(rep, cls);
  return certify(rep, lifts, lifts, radius, true);
}

bool is_simple(const HolonomyRep& rep, const CurveClass& cls) {
  IntersectionResult r = self_intersection(rep, cls);
  if (!r.certified) throw Error(ErrorKind::uncertified, "self-intersection not certified");
  return r.count == 0;
}

int parity_pairing(const HolonomyRep& rep, const Word& w1, const Word& w2) {
  const int r = rep.rank();
  const auto p1 = letter_parity(cyclic_reduce(w1), r), p2 = letter_parity(cyclic_reduce(w2), r);
  int acc = 0;
  for (int x = 0; x < r; ++x) {
    if (!p1[static_cast<size_t>(x)]) continue;
    for (int y = 0; y < r; ++y) {
      if (!p2[static_cast<size_t>(y)]) continue;
      int b;
      if (x == y) {
        b = rep.pairings[static_cast<size_t>(x)].reversing ? 1 : 0;
      } else {
        const auto& px = rep.pairings[static_cast<size_t>(x)];
        const auto& py = rep.pairings[static_cast<size_t>(y)];
        auto inside = [&](int s) { return px.source < s && s < px.target; };
        b = inside(py.source) != inside(py.target) ? 1 : 0;
      }
      acc ^= b;
    }
  }
  return acc;
}

void to_json(nlohmann::json& j, const IntersectionResult& r) {
  nlohmann::json wit = nlohmann::json::array();
  for (const auto& w : r.witnesses)
    wit.push_back({{"element", w.element}, {"point", {round12(w.point.real()), round12(w.point.imag())}}});
  j = {{"count", r.count}, {"certified", r.certified}, {"radius_used", round12(r.radius_used)}, {"witnesses", wit}};
}

}  // namespace curvesys
