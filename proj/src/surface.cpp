#include "curvesys/surface.hpp"

#include <regex>

#include "curvesys/error.hpp"

namespace curvesys {

void validate(const SurfaceSig& sig) {
  if (sig.genus < 0 || sig.boundaries < 0)
    throw Error(ErrorKind::invalid_surface, "negative genus or boundary count");
  if (!sig.orientable && sig.genus < 1)
    throw Error(ErrorKind::invalid_surface, "non-orientable surface needs c >= 1");
}

int euler_char(const SurfaceSig& sig) {
  validate(sig);
  return sig.orientable ? 2 - 2 * sig.genus - sig.boundaries : 2 - sig.genus - sig.boundaries;
}

int abs_euler_char(const SurfaceSig& sig) {
  int chi = euler_char(sig);
  return chi < 0 ? -chi : chi;
}

int free_rank(const SurfaceSig& sig) {
  if (sig.boundaries < 1)
    throw Error(ErrorKind::unsupported_surface, "fundamental group is free only with n >= 1");
  return 1 - euler_char(sig);
}

std::vector<CutResult> cut_along(const SurfaceSig& sig, LoopKind kind) {
  if (euler_char(sig) >= 0)
    throw Error(ErrorKind::unsupported_cut, "cutting needs chi < 0");
  const int n = sig.boundaries;
  std::vector<CutResult> out;
  if (kind == LoopKind::one_sided) {
    if (sig.orientable)
      throw Error(ErrorKind::unsupported_cut, "orientable surfaces carry no one-sided loop");
    const int c = sig.genus;
    if (c == 1) {
      out.push_back({SurfaceSig::orientable_surface(0, n + 1), true});
    } else {
      out.push_back({SurfaceSig::non_orientable(c - 1, n + 1), true});
      if (c % 2 == 1) out.push_back({SurfaceSig::orientable_surface((c - 1) / 2, n + 1), true});
    }
    return out;
  }
  // two-sided nonseparating: two new boundaries, chi unchanged
  if (sig.orientable) {
    if (sig.genus < 1)
      throw Error(ErrorKind::unsupported_cut, "planar surfaces have no nonseparating loop");
    out.push_back({SurfaceSig::orientable_surface(sig.genus - 1, n + 2), false});
    return out;
  }
  const int c = sig.genus;
  if (c < 2)
    throw Error(ErrorKind::unsupported_cut, "N_{1,n} has no two-sided nonseparating loop");
  if (c >= 3) out.push_back({SurfaceSig::non_orientable(c - 2, n + 2), false});
  if (c % 2 == 0) out.push_back({SurfaceSig::orientable_surface((c - 2) / 2, n + 2), false});
  return out;
}

SurfaceSig orientation_double_cover(const SurfaceSig& sig) {
  validate(sig);
  if (sig.orientable) throw Error(ErrorKind::not_non_orientable, "surface is already orientable");
  return SurfaceSig::orientable_surface(sig.genus - 1, 2 * sig.boundaries);
}

SurfaceSig parse_surface(const std::string& text) {
  static const std::regex re(R"(^\s*([SsNn])\s*:\s*(\d+)\s*,\s*(\d+)\s*$)");
  std::smatch m;
  if (!std::regex_match(text, m, re))
    throw Error(ErrorKind::parse_error, "surface must look like S:g,n or N:c,n, got '" + text + "'");
  SurfaceSig sig{m[1].str()[0] == 'S' || m[1].str()[0] == 's', std::stoi(m[2].str()),
                 std::stoi(m[3].str())};
  validate(sig);
  return sig;
}

std::string format_surface(const SurfaceSig& sig) {
  return std::string(sig.orientable ? "S:" : "N:") + std::to_string(sig.genus) + "," +
         std::to_string(sig.boundaries);
}

void to_json(nlohmann::json& j, const SurfaceSig& sig) {
  j = nlohmann::json{{"orientable", sig.orientable}, {"genus", sig.genus}, {"boundaries", sig.boundaries}};
}

void from_json(const nlohmann::json& j, SurfaceSig& sig) {
  sig.orientable = j.at("orientable").get<bool>();
  sig.genus = j.at("genus").get<int>();
  sig.boundaries = j.at("boundaries").get<int>();
  validate(sig);
}

}  // namespace curvesys
