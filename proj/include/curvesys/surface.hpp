#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace curvesys {

/// Homeomorphism type of a compact surface with boundary (boundaries double as punctures).
struct SurfaceSig {
  bool orientable = true;
  int genus = 0;  // g when orientable, crosscap number c otherwise
  int boundaries = 0;

  static SurfaceSig orientable_surface(int g, int n) { return {true, g, n}; }
  static SurfaceSig non_orientable(int c, int n) { return {false, c, n}; }

  bool operator==(const SurfaceSig&) const = default;
  auto operator<=>(const SurfaceSig&) const = default;
};

enum class LoopKind { one_sided, two_sided_nonseparating };

struct CutResult {
  SurfaceSig surface;
  bool verified_by_construction = true;  // false for cut cases outside the one-sided table
};

void validate(const SurfaceSig& sig);
int euler_char(const SurfaceSig& sig);
int abs_euler_char(const SurfaceSig& sig);

/// Rank of the free fundamental group of the punctured surface (n >= 1).
int free_rank(const SurfaceSig& sig);

std::vector<CutResult> cut_along(const SurfaceSig& sig, LoopKind kind);
SurfaceSig orientation_double_cover(const SurfaceSig& sig);

/// `S:g,n` or `N:c,n`.
SurfaceSig parse_surface(const std::string& text);
std::string format_surface(const SurfaceSig& sig);

void to_json(nlohmann::json& j, const SurfaceSig& sig);
void from_json(const nlohmann::json& j, SurfaceSig& sig);

}  // namespace curvesys
