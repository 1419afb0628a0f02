#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <vector>

#include "curvesys/holonomy.hpp"
#include "curvesys/system.hpp"
#include "json.hpp"

namespace curvesys {

/// Tip at a cusp between two consecutive arc ends, and its nib triangle. Coordinates put the
/// representative lift of the cusp at infinity (`to_cusp`); the parabolic stabiliser is then
/// z -> z + period and the horocycle orientation is increasing real part.
struct Nib {
  int cusp = -1;
  int left_arc = -1, right_arc = -1;  // system member indices
  double foot_left = 0, foot_right = 0;  // feet of the two lifts, foot_left < foot_right
  double period = 0;
  double horocycle = 2;  // tip height in cusp coordinates
  Mobiusd to_cusp;
  std::array<IdealPointd, 3> triangle;  // (cusp lift, left foot, right foot) in base coordinates
};

/// One nib per tip; 2|A| in total. Throws Precondition for an empty or invalid system.
std::vector<Nib> tips_of(const HolonomyRep& rep, const CurveSystem& arcs);

struct SlitSample {
  Pointd start;
  int pieces = 0;
  double length = 0;
};

struct SlitReport {
  int samples = 0;
  int violations = 0;
  int max_pieces = 0;
  double epsilon = 1e-6, min_separation = 1e-3;
  std::vector<SlitSample> bad;  // first few offending rays
};

/// Develops the ray from sampled interior points n toward the tip and looks for two parameter
/// values, more than `min_separation` apart, that land on the same point of the surface.
/// `corrupt` aims the rays at the attracting end of `bad_word` instead of the cusp.
SlitReport slit_embedding_check(const HolonomyRep& rep, const Nib& nib, int samples, std::uint64_t seed,
                                const Word* corrupt = nullptr, double max_length = 60);

/// Nib preimages of s (a point of the base polygon) summed over all nibs.
int preimage_count(const HolonomyRep& rep, const std::vector<Nib>& nibs, const Pointd& s);

struct Lemma3Report {
  int pairs = 0;       // coincidences n1 != n2 with nu(n1) = nu(n2) tested
  int violations = 0;  // pairs whose slits meet somewhere else
};
Lemma3Report lemma3_check(const HolonomyRep& rep, const std::vector<Nib>& nibs, const Pointd& s);

/// Point of the base polygon outside every Ford horoball (the thick part).
Pointd sample_thick_point(const HolonomyRep& rep, std::mt19937_64& rng);

struct NibReport {
  std::size_t arcs = 0, tips = 0;
  int slit_samples_per_nib = 0;
  int slit_violations = 0;
  int points = 0;
  int max_preimages = 0, min_preimages = 0;
  int prop2_bound = 0;
  int prop2_violations = 0;
  Lemma3Report lemma3;
  std::uint64_t seed = 0;
};

NibReport run_nib_checks(const HolonomyRep& rep, const CurveSystem& arcs, int slit_samples, int points,
                         std::uint64_t seed, int workers = 0);

void to_json(nlohmann::json& j, const Nib& n);
void to_json(nlohmann::json& j, const NibReport& r);

}  // namespace curvesys
