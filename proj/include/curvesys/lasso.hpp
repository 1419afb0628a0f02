#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace curvesys {

enum class LassoCase { orientation_preserving, orientation_reversing };

struct LassoParams {
  double t = 0;
  double c = 1;
  LassoCase kase = LassoCase::orientation_preserving;
};

double ratio_R(double t, double c);
/// 1 + 2(2c-1)/(ct + 2/t + 2), the rearranged form.
double ratio_R_rearranged(double t, double c);

/// c > 1/2, t < -2 and t^2 + 8c(1+t) >= 0 (boundary equality admitted).
bool region_op(double t, double c);
bool region_or(double t, double c);
bool in_region(LassoCase k, double t, double c);

/// (1-d, y_d) on the honda path. Throws NegativeRadicand or PoleAtD.
std::pair<double, double> honda_point(double d, double t, double c);

/// Curvatures at d = 0 from closed-form derivatives. Throws NotSmooth.
std::pair<double, double> curvature_pair(double t, double c);
/// Same ratio from central differences of honda_point with step h.
double curvature_ratio_fd(double t, double c, double h = 1e-5);

struct GridSpec {
  double t_lo = 0, t_hi = 0;  // |t| sampled log-uniformly over the interval
  double c_lo = 0.5, c_hi = 10;  // c uniform in (c_lo, c_hi]
  int samples = 10000;  // admissible samples wanted
  std::uint64_t seed = 1;
};

GridSpec default_grid(LassoCase k);

struct Violation {
  double t, c, R;
};

struct RegionReport {
  LassoCase kase = LassoCase::orientation_preserving;
  GridSpec grid;
  int samples = 0;
  int rejected = 0;  // draws outside the quadratic constraint
  double min_R = 0, max_R = 0;
  double min_margin = 0;  // min |R - 1|
  std::vector<Violation> violations;
};

/// Checks R < 1 (preserving) or R > 1 (reversing) on seeded samples of the region.
RegionReport sweep(LassoCase k, const GridSpec& grid, int workers = 0);
/// Throws ViolationFound with the first offending sample.
void require_clean(const RegionReport& r);

struct SpiralRoot {
  double a = 0;
  double phi_a = 0, phi_phi_a = 0;
  double residual = 0;  // max of |a - phi(a)|, |a - phi(phi(a))|
  bool in_range = false;  // a in (1, 2c)
};

struct SpiralReport {
  double t = 0, c = 0;
  std::vector<SpiralRoot> roots;
  std::optional<SpiralRoot> witness;  // the root in (1, 2c), if any
};

/// Roots of a^2 + t a - 2c(1+t) = 0 checked against the reversing map phi(z) = 2c(1+t)/(conj z + t).
SpiralReport spiral_fixed_point(double t, double c);

std::string to_string(LassoCase k);
LassoCase parse_lasso_case(const std::string& s);

void to_json(nlohmann::json& j, const RegionReport& r);
void to_json(nlohmann::json& j, const SpiralReport& r);

}  // namespace curvesys
