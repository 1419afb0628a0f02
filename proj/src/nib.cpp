#include "curvesys/nib.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <map>

#include "curvesys/error.hpp"
#include "curvesys/parallel.hpp"
#include "curvesys/report.hpp"

namespace curvesys {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Sign of z relative to the geodesic (u, v) of the base polygon.
int side_sign(const IdealPointd& u, const IdealPointd& v, const Pointd& z) {
  double s;
  if (u.is_infinity()) s = z.real() - v.value();
  else if (v.is_infinity()) s = z.real() - u.value();
  else {
    const double c = (u.value() + v.value()) / 2, r = std::abs(u.value() - v.value()) / 2;
    s = std::norm(z - Pointd(c, 0)) - r * r;
  }
  return s > 0 ? 1 : (s < 0 ? -1 : 0);
}

// (0, 1, inf) are always polygon vertices, so this point is interior.
const Pointd kInside(0.5, 1.0);

int beyond_side(const HolonomyRep& rep, const Pointd& z) {
  for (int k = 0; k < rep.side_count(); ++k) {
    const IdealPointd &u = rep.vertex(k), &v = rep.vertex(k + 1);
    const int sz = side_sign(u, v, z);
    if (sz != 0 && sz != side_sign(u, v, kInside)) return k;
  }
  return -1;
}

// Deck element M with M z in the base polygon.
Mobiusd reduce(const HolonomyRep& rep, Pointd& z) {
  Mobiusd m;
  for (int guard = 0;; ++guard) {
    if (guard > 100000) throw Error(ErrorKind::precondition, "point reduction did not terminate");
    const int k = beyond_side(rep, z);
    if (k < 0) return m;
    const Mobiusd back = rep.image({rep.letter_of_side(k)}).inverse();
    z = back.apply(z);
    m = back * m;
  }
}

// Geodesic through interior point z ending at q.
Geodesicd line_to(const Pointd& z, const IdealPointd& q) {
  if (q.is_infinity()) return {IdealPointd::real(z.real()), q};
  const double x = q.value();
  if (std::abs(z.real() - x) < 1e-14 * std::max(1.0, std::abs(x))) return {IdealPointd::infinity(), q};
  const double c = (std::norm(z) - x * x) / (2 * (z.real() - x));
  return {IdealPointd::real(2 * c - x), q};
}

struct Piece {
  Geodesicd line;
  double s0 = 0, s1 = 0;  // frame parameters inside the polygon
  double t0 = 0;          // arc length from the ray start at s0
};

struct Ray {
  std::vector<Piece> pieces;
  double length = 0;
  bool truncated = false;
};

Ray develop(const HolonomyRep& rep, Pointd z, IdealPointd q, double max_length) {
  const Mobiusd m = reduce(rep, z);
  q = m.apply(q);
  Geodesicd line = line_to(z, q);
  Ray ray;
  for (int guard = 0;; ++guard) {
    if (guard > 100000) throw Error(ErrorKind::precondition, "ray development did not terminate");
    GeodesicFrame<double> f(line);
    const double s = f.param(z);
    int exit = -1;
    double best = kInf;
    for (int k = 0; k < rep.side_count(); ++k) {
      const IdealPointd &u = rep.vertex(k), &v = rep.vertex(k + 1);
      if (interleave(line.from, line.to, u, v) != Crossing::cross) continue;
      const double sk = f.crossing_param(u, v);
      if (sk > s + 1e-9 && sk < best) {
        best = sk;
        exit = k;
      }
    }
    Piece p{line, s, best, ray.length};
    if (exit < 0) {
      if (rep.vertex_at(line.to) < 0 && !ray.truncated)
        throw Error(ErrorKind::precondition, "ray left the polygon without crossing a side");
      p.s1 = std::min(kInf, s + (max_length - ray.length));
      ray.pieces.push_back(p);
      ray.length = kInf;
      return ray;
    }
    if (ray.length + (best - s) > max_length) {
      p.s1 = s + (max_length - ray.length);
      ray.pieces.push_back(p);
      ray.length = max_length;
      ray.truncated = true;
      return ray;
    }
    ray.pieces.push_back(p);
    ray.length += best - s;
    const Mobiusd back = rep.image({rep.letter_of_side(exit)}).inverse();
    z = back.apply(f.point(best));
    line = {back.apply(line.from), back.apply(line.to)};
  }
}

// Parameters (arc length from each ray's start) where two pieces cross, if they do.
bool pieces_cross(const Piece& a, const Piece& b, double* ta, double* tb) {
  const Crossing cr = interleave(a.line.from, a.line.to, b.line.from, b.line.to);
  if (cr == Crossing::disjoint) return false;
  if (cr == Crossing::tie) {
    // shared endpoint; a genuine overlap needs the same line
    const bool same = (same_point(a.line.from, b.line.from, 1e-12) && same_point(a.line.to, b.line.to, 1e-12)) ||
                      (same_point(a.line.from, b.line.to, 1e-12) && same_point(a.line.to, b.line.from, 1e-12));
    if (!same) return false;
    GeodesicFrame<double> fa(a.line);
    // map b's interval into a's frame through a shared interior point
    const Pointd pb = GeodesicFrame<double>(b.line).point(b.s0);
    const double off = fa.param(pb);
    const double lo = std::max(a.s0, std::min(off, off + (b.s1 - b.s0)));
    const double hi = std::min(a.s1, std::max(off, off + (b.s1 - b.s0)));
    if (lo > hi + 1e-9) return false;
    *ta = a.t0 + (lo - a.s0);
    *tb = b.t0 + std::abs(lo - off);
    return true;
  }
  GeodesicFrame<double> fa(a.line), fb(b.line);
  const double sa = fa.crossing_param(b.line.from, b.line.to);
  const double sb = fb.crossing_param(a.line.from, a.line.to);
  const double tol = 1e-9;
  if (sa < a.s0 - tol || sa > a.s1 + tol || sb < b.s0 - tol || sb > b.s1 + tol) return false;
  *ta = a.t0 + (sa - a.s0);
  *tb = b.t0 + (sb - b.s0);
  return true;
}

// Deck elements taking each polygon vertex to the representative vertex of its cusp.
std::vector<Mobiusd> vertex_transport(const HolonomyRep& rep, std::vector<int>* rep_vertex) {
  const int m = rep.side_count();
  std::vector<Mobiusd> h(static_cast<size_t>(m));
  std::vector<char> seen(static_cast<size_t>(m), 0);
  rep_vertex->assign(rep.cusp_words.size(), -1);
  for (int v0 = 0; v0 < m; ++v0) {
    if (seen[static_cast<size_t>(v0)]) continue;
    const int cusp = rep.vertex_cusp[static_cast<size_t>(v0)];
    (*rep_vertex)[static_cast<size_t>(cusp)] = v0;
    seen[static_cast<size_t>(v0)] = 1;
    std::deque<int> queue{v0};
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop_front();
      for (int g = 0; g < rep.rank(); ++g)
        for (bool inv : {false, true}) {
          const Mobiusd step = rep.image({letter_of(g, inv)});
          const int u = rep.vertex_at(step.apply(rep.vertex(v)));
          if (u < 0 || seen[static_cast<size_t>(u)]) continue;
          seen[static_cast<size_t>(u)] = 1;
          h[static_cast<size_t>(u)] = h[static_cast<size_t>(v)] * step.inverse();
          queue.push_back(u);
        }
    }
  }
  return h;
}

// Real coordinate of an ideal point in cusp coordinates (never infinity for an arc foot).
double foot(const Mobiusd& to_cusp, const IdealPointd& p) {
  const IdealPointd q = to_cusp.apply(p);
  if (q.is_infinity(1e-12)) throw Error(ErrorKind::precondition, "arc lift returns to its own cusp lift");
  return q.value();
}

bool in_triangle(const Nib& nib, const Pointd& z) {
  const Pointd w = nib.to_cusp.apply(z);
  if (!(w.real() > nib.foot_left && w.real() < nib.foot_right)) return false;
  const double c = (nib.foot_left + nib.foot_right) / 2, r = (nib.foot_right - nib.foot_left) / 2;
  return std::norm(w - Pointd(c, 0)) > r * r;
}

// Lifts of s inside the nib triangle, found by walking only toward tiles the triangle reaches.
std::vector<Pointd> preimages(const HolonomyRep& rep, const Nib& nib, const Pointd& s) {
  std::vector<Pointd> out;
  struct Tile {
    Mobiusd g;
    int entry;
  };
  std::deque<Tile> queue{{Mobiusd(), -1}};
  std::size_t visited = 0;
  while (!queue.empty()) {
    const Tile tile = queue.front();
    queue.pop_front();
    if (++visited > 200000) throw Error(ErrorKind::precondition, "nib preimage walk did not terminate");
    const Pointd gs = tile.g.apply(s);
    if (in_triangle(nib, gs)) out.push_back(gs);
    for (int k = 0; k < rep.side_count(); ++k) {
      if (k == tile.entry) continue;
      const IdealPointd u = tile.g.apply(rep.vertex(k)), v = tile.g.apply(rep.vertex(k + 1));
      const IdealPointd w = tile.g.apply(rep.vertex(k + 2));
      bool reach = false;
      for (const IdealPointd& d : nib.triangle) reach = reach || interleave(u, v, w, d) == Crossing::cross;
      if (!reach) continue;
      const Letter l = rep.letter_of_side(k);
      queue.push_back({tile.g * rep.image({l}), rep.side_of_letter(-l)});
    }
  }
  return out;
}

}  // namespace

std::vector<Nib> tips_of(const HolonomyRep& rep, const CurveSystem& arcs) {
  if (arcs.kind != SystemKind::arcs || arcs.members.empty())
    throw Error(ErrorKind::precondition, "tip analysis needs a nonempty arc system");
  if (arcs.validation.state == ValidationState::invalid)
    throw Error(ErrorKind::precondition, "arc system is invalid: " + arcs.validation.reason);
  std::vector<int> rep_vertex;
  const std::vector<Mobiusd> h = vertex_transport(rep, &rep_vertex);
  const std::size_t ncusp = rep.cusp_words.size();

  std::vector<Mobiusd> to_cusp(ncusp);
  std::vector<double> period(ncusp);
  for (std::size_t c = 0; c < ncusp; ++c) {
    const IdealPointd v = rep.vertex(rep_vertex[c]);
    to_cusp[c] = v.is_infinity() ? Mobiusd() : Mobiusd::from_coeffs(0, -1, 1, -v.value(), false);
    // conjugate the cusp word's parabolic to the representative lift
    const Mobiusd p = rep.image(rep.cusp_words[c]);
    const Mat2<double>& pm = p.matrix();
    const double tr = pm.trace();
    Vec2<double> fix = std::abs(pm(1, 0)) > 1e-12 ? Vec2<double>(pm(0, 0) - tr / 2, pm(1, 0))
                                                 : Vec2<double>(1, 0);
    if (std::abs(pm(1, 0)) <= 1e-12 && std::abs(pm(0, 1)) <= 1e-12)
      throw Error(ErrorKind::precondition, "cusp word image is trivial");
    const int fv = rep.vertex_at(IdealPointd{fix});
    if (fv < 0) throw Error(ErrorKind::precondition, "cusp word does not fix a polygon vertex");
    const Mobiusd pc = to_cusp[c] * h[static_cast<size_t>(fv)] * p * h[static_cast<size_t>(fv)].inverse() *
                       to_cusp[c].inverse();
    const Mat2<double>& q = pc.matrix();
    if (std::abs(q(1, 0)) > 1e-9 * q.norm()) throw Error(ErrorKind::precondition, "transported cusp word misses infinity");
    period[c] = std::abs(q(0, 1) / q(1, 1));
  }

  struct End {
    double x;
    int arc;
  };
  std::vector<std::vector<End>> ends(ncusp);
  for (std::size_t i = 0; i < arcs.members.size(); ++i) {
    const CurveClass a = canonicalize(rep, arcs.members[i]);
    const Mobiusd w = rep.image(a.word);
    const int cs = rep.vertex_cusp[static_cast<size_t>(a.start)], ce = rep.vertex_cusp[static_cast<size_t>(a.end)];
    const double xs = foot(to_cusp[static_cast<size_t>(cs)] * h[static_cast<size_t>(a.start)], w.apply(rep.vertex(a.end)));
    const double xe =
        foot(to_cusp[static_cast<size_t>(ce)] * h[static_cast<size_t>(a.end)], w.inverse().apply(rep.vertex(a.start)));
    ends[static_cast<size_t>(cs)].push_back({xs, static_cast<int>(i)});
    ends[static_cast<size_t>(ce)].push_back({xe, static_cast<int>(i)});
  }

  std::vector<Nib> nibs;
  for (std::size_t c = 0; c < ncusp; ++c) {
    auto& e = ends[c];
    if (e.empty()) continue;
    const double L = period[c];
    for (End& x : e) x.x -= L * std::floor(x.x / L);
    std::sort(e.begin(), e.end(), [](const End& a, const End& b) { return a.x < b.x; });
    for (std::size_t k = 0; k < e.size(); ++k) {
      const End& a = e[k];
      End b = e[(k + 1) % e.size()];
      if (k + 1 == e.size()) b.x += L;
      if (b.x - a.x < 1e-9 * std::max(1.0, L)) throw Error(ErrorKind::precondition, "two arcs share a lift");
      Nib n;
      n.cusp = static_cast<int>(c);
      n.left_arc = a.arc;
      n.right_arc = b.arc;
      n.foot_left = a.x;
      n.foot_right = b.x;
      n.period = L;
      n.to_cusp = to_cusp[c];
      const Mobiusd back = to_cusp[c].inverse();
      n.triangle = {back.apply(IdealPointd::infinity()), back.apply(IdealPointd::real(a.x)),
                    back.apply(IdealPointd::real(b.x))};
      nibs.push_back(n);
    }
  }
  return nibs;
}

SlitReport slit_embedding_check(const HolonomyRep& rep, const Nib& nib, int samples, std::uint64_t seed,
                                const Word* corrupt, double max_length) {
  SlitReport rep_out;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const Mobiusd back = nib.to_cusp.inverse();
  IdealPointd target = nib.triangle[0];
  if (corrupt) target = rep.image(*corrupt).axis_endpoints().second;
  const double c = (nib.foot_left + nib.foot_right) / 2, r = (nib.foot_right - nib.foot_left) / 2;
  for (int i = 0; i < samples; ++i) {
    const double x = nib.foot_left + (nib.foot_right - nib.foot_left) * (0.02 + 0.96 * u(rng));
    const double ymin = std::sqrt(std::max(r * r - (x - c) * (x - c), 0.0));
    const double top = std::max(nib.horocycle, 2 * ymin);
    const double y = ymin * std::exp(u(rng) * std::log(top / ymin));
    const Pointd n = back.apply(Pointd(x, y));
    const Ray ray = develop(rep, n, target, max_length);
    ++rep_out.samples;
    rep_out.max_pieces = std::max(rep_out.max_pieces, static_cast<int>(ray.pieces.size()));
    bool bad = false;
    for (std::size_t a = 0; a < ray.pieces.size() && !bad; ++a)
      for (std::size_t b = a + 1; b < ray.pieces.size() && !bad; ++b) {
        double ta, tb;
        if (pieces_cross(ray.pieces[a], ray.pieces[b], &ta, &tb) && std::abs(ta - tb) > rep_out.min_separation) bad = true;
      }
    if (bad) {
      ++rep_out.violations;
      if (rep_out.bad.size() < 5)
        rep_out.bad.push_back({n, static_cast<int>(ray.pieces.size()), ray.length});
    }
  }
  return rep_out;
}

int preimage_count(const HolonomyRep& rep, const std::vector<Nib>& nibs, const Pointd& s) {
  int total = 0;
  for (const Nib& n : nibs) total += static_cast<int>(preimages(rep, n, s).size());
  return total;
}

Lemma3Report lemma3_check(const HolonomyRep& rep, const std::vector<Nib>& nibs, const Pointd& s) {
  struct Pre {
    Pointd n;
    std::size_t nib;
  };
  std::vector<Pre> pre;
  for (std::size_t i = 0; i < nibs.size(); ++i)
    for (const Pointd& n : preimages(rep, nibs[i], s)) pre.push_back({n, i});
  std::vector<Ray> rays;
  for (const Pre& p : pre) rays.push_back(develop(rep, p.n, nibs[p.nib].triangle[0], kInf));
  Lemma3Report out;
  for (std::size_t a = 0; a < rays.size(); ++a)
    for (std::size_t b = a + 1; b < rays.size(); ++b) {
      ++out.pairs;
      bool extra = false;
      for (const Piece& pa : rays[a].pieces)
        for (const Piece& pb : rays[b].pieces) {
          double ta, tb;
          if (!pieces_cross(pa, pb, &ta, &tb)) continue;
          if (ta < 1e-7 && tb < 1e-7) continue;  // the shared point nu(n1) = nu(n2)
          extra = true;
        }
      out.violations += extra ? 1 : 0;
    }
  return out;
}

Pointd sample_thick_point(const HolonomyRep& rep, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double width = rep.side_count() - 2;
  for (int guard = 0; guard < 1000000; ++guard) {
    const Pointd z(width * u(rng), u(rng));
    if (z.imag() <= 0 || beyond_side(rep, z) >= 0) continue;
    bool thick = z.imag() < 1;
    for (int k = 0; k + 1 < rep.side_count() && thick; ++k)
      thick = ford_height(z, Vec2<double>(k, 1)) < 1;
    if (thick) return z;
  }
  throw Error(ErrorKind::precondition, "no thick point found");
}

NibReport run_nib_checks(const HolonomyRep& rep, const CurveSystem& arcs, int slit_samples, int points,
                         std::uint64_t seed, int workers) {
  NibReport out;
  out.seed = seed;
  const std::vector<Nib> nibs = tips_of(rep, arcs);
  out.arcs = arcs.members.size();
  out.tips = nibs.size();
  out.slit_samples_per_nib = slit_samples;
  out.points = points;
  out.prop2_bound = 2 * (abs_euler_char(rep.surface) + 1);

  std::vector<SlitReport> slits(nibs.size());
  parallel_for(nibs.size(), [&](std::size_t i) { slits[i] = slit_embedding_check(rep, nibs[i], slit_samples, seed + i); },
               workers);
  for (const auto& s : slits) out.slit_violations += s.violations;

  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::vector<Pointd> pts;
  for (int i = 0; i < points; ++i) pts.push_back(sample_thick_point(rep, rng));
  std::vector<int> counts(pts.size());
  std::vector<Lemma3Report> l3(pts.size());
  parallel_for(
      pts.size(),
      [&](std::size_t i) {
        counts[i] = preimage_count(rep, nibs, pts[i]);
        l3[i] = lemma3_check(rep, nibs, pts[i]);
      },
      workers);
  out.min_preimages = counts.empty() ? 0 : *std::min_element(counts.begin(), counts.end());
  out.max_preimages = counts.empty() ? 0 : *std::max_element(counts.begin(), counts.end());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    out.prop2_violations += counts[i] > out.prop2_bound ? 1 : 0;
    out.lemma3.pairs += l3[i].pairs;
    out.lemma3.violations += l3[i].violations;
  }
  return out;
}

void to_json(nlohmann::json& j, const Nib& n) {
  j = {{"cusp", n.cusp},
       {"left_arc", n.left_arc},
       {"right_arc", n.right_arc},
       {"foot_left", round12(n.foot_left)},
       {"foot_right", round12(n.foot_right)},
       {"period", round12(n.period)},
       {"horocycle", round12(n.horocycle)}};
}

void to_json(nlohmann::json& j, const NibReport& r) {
  j = {{"arcs", r.arcs},
       {"tips", r.tips},
       {"slit_samples_per_nib", r.slit_samples_per_nib},
       {"slit_violations", r.slit_violations},
       {"points", r.points},
       {"min_preimages", r.min_preimages},
       {"max_preimages", r.max_preimages},
       {"prop2_bound", r.prop2_bound},
       {"prop2_violations", r.prop2_violations},
       {"lemma3_pairs", r.lemma3.pairs},
       {"lemma3_violations", r.lemma3.violations},
       {"seed", r.seed}};
}

}  // namespace curvesys
