#include "curvesys/lasso.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "curvesys/error.hpp"
#include "curvesys/hyperbolic.hpp"
#include "curvesys/parallel.hpp"
#include "curvesys/report.hpp"

namespace curvesys {

double ratio_R(double t, double c) {
  const double den = 2 + c * t * t + 2 * t;
  if (std::abs(den) < 1e-12) throw Error(ErrorKind::singular_denominator, "2 + ct^2 + 2t vanishes");
  return (2 + c * t * t + 4 * c * t) / den;
}

double ratio_R_rearranged(double t, double c) {
  if (t == 0) throw Error(ErrorKind::singular_denominator, "rearranged form needs t != 0");
  const double den = c * t + 2 / t + 2;
  if (std::abs(den) < 1e-12) throw Error(ErrorKind::singular_denominator, "ct + 2/t + 2 vanishes");
  return 1 + 2 * (2 * c - 1) / den;
}

bool region_op(double t, double c) { return c > 0.5 && t < -2 && t * t + 8 * c * (1 + t) >= 0; }
bool region_or(double t, double c) { return c > 0.5 && t > 0; }
bool in_region(LassoCase k, double t, double c) {
  return k == LassoCase::orientation_preserving ? region_op(t, c) : region_or(t, c);
}

namespace {

// Radicand f(d) = A(d-1)/(d-B) - (1-d)^2 with A = 2c(1+t), B = 1+t, and its first two derivatives.
struct Radicand {
  double A, B;
  Radicand(double t, double c) : A(2 * c * (1 + t)), B(1 + t) {}
  double f(double d) const { return A * (d - 1) / (d - B) - (1 - d) * (1 - d); }
  double f1(double d) const { return A * (1 - B) / ((d - B) * (d - B)) + 2 * (1 - d); }
  double f2(double d) const { return -2 * A * (1 - B) / ((d - B) * (d - B) * (d - B)) - 2; }
};

}  // namespace

std::pair<double, double> honda_point(double d, double t, double c) {
  if (std::abs(d - (1 + t)) < 1e-12) throw Error(ErrorKind::pole_at_d, "d = 1 + t");
  const double r = Radicand(t, c).f(d);
  if (r < 0) throw Error(ErrorKind::negative_radicand, "radicand " + fmt_num(r) + " at d = " + fmt_num(d));
  return {1 - d, std::sqrt(r)};
}

std::pair<double, double> curvature_pair(double t, double c) {
  if (std::abs(1 + t) < 1e-12) throw Error(ErrorKind::not_smooth, "pole at d = 0");
  const Radicand q(t, c);
  const double f = q.f(0);
  if (!(f > 0)) throw Error(ErrorKind::not_smooth, "radicand is not positive at d = 0");
  // x = 1 - d, y = sqrt(f): x' = -1, x'' = 0
  const double y = std::sqrt(f);
  const double y1 = q.f1(0) / (2 * y);
  const double y2 = (2 * q.f2(0) * f - q.f1(0) * q.f1(0)) / (4 * f * y);
  const double speed2 = 1 + y1 * y1;
  const double kappa_path = -y2 / std::pow(speed2, 1.5);
  const double kappa_tangent = 1 / (y * std::sqrt(speed2));
  return {kappa_path, kappa_tangent};
}

double curvature_ratio_fd(double t, double c, double h) {
  auto y = [&](double d) { return honda_point(d, t, c).second; };
  const double y0 = y(0), yp = y(h), ym = y(-h);
  const double y1 = (yp - ym) / (2 * h);
  const double y2 = (yp - 2 * y0 + ym) / (h * h);
  const double speed2 = 1 + y1 * y1;
  return (-y2 / std::pow(speed2, 1.5)) * (y0 * std::sqrt(speed2));
}

GridSpec default_grid(LassoCase k) {
  GridSpec g;
  if (k == LassoCase::orientation_preserving) {
    g.t_lo = -50;
    g.t_hi = -2.01;
  } else {
    g.t_lo = 1e-3;
    g.t_hi = 50;
  }
  return g;
}

RegionReport sweep(LassoCase k, const GridSpec& grid, int workers) {
  const bool op = k == LassoCase::orientation_preserving;
  if (!(grid.t_lo < grid.t_hi) || !(grid.c_lo < grid.c_hi) || grid.c_lo < 0.5 || grid.samples < 1)
    throw Error(ErrorKind::precondition, "empty or malformed grid");
  if (op ? !(grid.t_hi < -2) : !(grid.t_lo > 0))
    throw Error(ErrorKind::precondition, "grid leaves the " + to_string(k) + " region");

  RegionReport rep;
  rep.kase = k;
  rep.grid = grid;
  // draw sequentially so the sample set never depends on the worker count
  std::mt19937_64 rng(grid.seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double la = std::log(std::abs(grid.t_lo)), lb = std::log(std::abs(grid.t_hi));
  std::vector<std::pair<double, double>> pts;
  const long long max_draws = 1000LL * grid.samples;
  for (long long draws = 0; static_cast<int>(pts.size()) < grid.samples; ++draws) {
    if (draws >= max_draws) throw Error(ErrorKind::precondition, "grid has too few admissible points");
    const double mag = std::exp(la + (lb - la) * u(rng));
    const double t = op ? -mag : mag;
    const double c = grid.c_hi - (grid.c_hi - grid.c_lo) * u(rng);
    if (!in_region(k, t, c)) {
      ++rep.rejected;
      continue;
    }
    pts.emplace_back(t, c);
  }
  std::vector<double> R(pts.size());
  parallel_for(pts.size(), [&](std::size_t i) { R[i] = ratio_R(pts[i].first, pts[i].second); }, workers);

  rep.samples = static_cast<int>(pts.size());
  rep.min_R = R.empty() ? 0 : R[0];
  rep.max_R = rep.min_R;
  rep.min_margin = R.empty() ? 0 : std::abs(R[0] - 1);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    rep.min_R = std::min(rep.min_R, R[i]);
    rep.max_R = std::max(rep.max_R, R[i]);
    rep.min_margin = std::min(rep.min_margin, std::abs(R[i] - 1));
    if (op ? !(R[i] < 1) : !(R[i] > 1)) rep.violations.push_back({pts[i].first, pts[i].second, R[i]});
  }
  return rep;
}

void require_clean(const RegionReport& r) {
  if (r.violations.empty()) return;
  const Violation& v = r.violations.front();
  throw Error(ErrorKind::violation_found,
              "R(" + fmt_num(v.t) + ", " + fmt_num(v.c) + ") = " + fmt_num(v.R) + " violates the " + to_string(r.kase) + " bound");
}

SpiralReport spiral_fixed_point(double t, double c) {
  if (!region_or(t, c)) throw Error(ErrorKind::precondition, "(t, c) is outside the reversing region");
  SpiralReport rep;
  rep.t = t;
  rep.c = c;
  const double k = 2 * c * (1 + t);
  const Mobiusd phi = Mobiusd::from_coeffs(0, k, 1, t, true);
  const double disc = t * t + 4 * k;
  const double s = std::sqrt(disc);
  // stable pair of roots
  const double q = -0.5 * (t + std::copysign(s, t));
  for (double a : {q, -k / q}) {
    SpiralRoot r;
    r.a = a;
    r.phi_a = phi.apply(IdealPointd::real(a)).value();
    r.phi_phi_a = phi.apply(phi.apply(IdealPointd::real(a))).value();
    r.residual = std::max(std::abs(a - r.phi_a), std::abs(a - r.phi_phi_a));
    r.in_range = a > 1 && a < 2 * c;
    rep.roots.push_back(r);
  }
  std::sort(rep.roots.begin(), rep.roots.end(), [](const SpiralRoot& x, const SpiralRoot& y) { return x.a < y.a; });
  for (const SpiralRoot& r : rep.roots)
    if (r.in_range) rep.witness = r;
  return rep;
}

std::string to_string(LassoCase k) {
  return k == LassoCase::orientation_preserving ? "orientation_preserving" : "orientation_reversing";
}

LassoCase parse_lasso_case(const std::string& s) {
  if (s == "op" || s == "orientation_preserving") return LassoCase::orientation_preserving;
  if (s == "or" || s == "orientation_reversing") return LassoCase::orientation_reversing;
  throw Error(ErrorKind::parse_error, "case must be op or or");
}

void to_json(nlohmann::json& j, const RegionReport& r) {
  nlohmann::json viol = nlohmann::json::array();
  for (const auto& v : r.violations) viol.push_back({{"t", round12(v.t)}, {"c", round12(v.c)}, {"R", round12(v.R)}});
  j = {{"case", to_string(r.kase)},
       {"grid",
        {{"t_lo", round12(r.grid.t_lo)},
         {"t_hi", round12(r.grid.t_hi)},
         {"c_lo", round12(r.grid.c_lo)},
         {"c_hi", round12(r.grid.c_hi)},
         {"samples", r.grid.samples},
         {"seed", r.grid.seed}}},
       {"samples", r.samples},
       {"rejected", r.rejected},
       {"min_R", round12(r.min_R)},
       {"max_R", round12(r.max_R)},
       {"min_margin", round12(r.min_margin)},
       {"violations", viol}};
}

void to_json(nlohmann::json& j, const SpiralReport& r) {
  auto root = [](const SpiralRoot& x) {
    return nlohmann::json{{"a", round12(x.a)},
                          {"phi_a", round12(x.phi_a)},
                          {"phi_phi_a", round12(x.phi_phi_a)},
                          {"residual", round12(x.residual)},
                          {"in_range", x.in_range}};
  };
  nlohmann::json roots = nlohmann::json::array();
  for (const auto& x : r.roots) roots.push_back(root(x));
  j = {{"t", round12(r.t)}, {"c", round12(r.c)}, {"roots", roots}};
  j["witness"] = r.witness ? root(*r.witness) : nlohmann::json(nullptr);
}

}  // namespace curvesys
