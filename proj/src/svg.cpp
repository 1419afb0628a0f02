#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

#include "curvesys/error.hpp"
#include "curvesys/system.hpp"

namespace curvesys {

namespace {

constexpr double kSize = 480, kMid = kSize / 2, kRadius = 170;

struct Pt {
  double x, y;
};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", std::abs(v) < 0.005 ? 0.0 : v);
  return buf;
}

Pt polar(double r, double angle) { return {kMid + r * std::cos(angle), kMid + r * std::sin(angle)}; }

std::string colour(std::size_t i) {
  return "hsl(" + std::to_string((i * 137) % 360) + ",70%,42%)";
}

std::pair<std::string, int> split(const std::string& wp) {
  const auto c = wp.find(':');
  if (c == std::string::npos) return {wp, 0};
  return {wp.substr(0, c), std::stoi(wp.substr(c + 1))};
}

// Waypoints in the crosscap-circle model. Consecutive `out` stops follow the outer arc.
std::vector<Pt> circle_path(const ChordData& d, const std::vector<std::string>& path, std::size_t idx) {
  const double m = static_cast<double>(std::max<std::size_t>(d.items.size(), 1));
  const double tau = 2 * std::numbers::pi;
  auto item_angle = [&](int k) { return tau * k / m - std::numbers::pi / 2; };
  auto gap_angle = [&](int g) { return tau * (g + 0.5) / m - std::numbers::pi / 2; };
  const double jitter = 3.0 * static_cast<double>(idx % 7) - 9.0;
  std::vector<Pt> pts;
  int last_out = -1;
  for (const std::string& wp : path) {
    const auto [kind, k] = split(wp);
    if (kind == "ring") {
      const double r = 22 + 0.5 * jitter;
      for (int s = 0; s <= 24; ++s) pts.push_back(polar(r, tau * s / 24));
    } else if (kind == "center") {
      pts.push_back({kMid + jitter, kMid - jitter});
    } else if (kind == "item") {
      pts.push_back(polar(kRadius, item_angle(k)));
    } else if (kind == "gap") {
      pts.push_back(polar(kRadius, gap_angle(k) + jitter * 0.002));
    } else if (kind == "out") {
      const double r = kRadius + 30 + 2 * static_cast<double>(idx % 10);
      if (last_out >= 0) {
        const double a0 = gap_angle(last_out), a1 = gap_angle(k);
        for (int s = 1; s < 16; ++s) pts.push_back(polar(r, a0 + (a1 - a0) * s / 16));
      }
      pts.push_back(polar(r, gap_angle(k)));
      last_out = k;
      continue;
    } else {
      throw Error(ErrorKind::no_chord_data, "unknown waypoint '" + wp + "'");
    }
    last_out = -1;
  }
  return pts;
}

std::vector<Pt> polygon_path(const ChordData& d, const std::vector<std::string>& path, std::size_t idx) {
  const int sides = std::max(d.polygon_sides, 3);
  const double tau = 2 * std::numbers::pi;
  auto vertex = [&](int k, double r) { return polar(r, tau * k / sides - std::numbers::pi / 2); };
  const double inset = kRadius * (0.96 - 0.01 * static_cast<double>(idx % 5));
  std::vector<Pt> pts;
  for (const std::string& wp : path) {
    const auto [kind, k] = split(wp);
    if (kind == "vertex") {
      pts.push_back(vertex(k, inset));
    } else if (kind == "side") {
      const Pt a = vertex(k, kRadius), b = vertex(k + 1, kRadius);
      pts.push_back({(a.x + b.x) / 2, (a.y + b.y) / 2});
    } else if (kind == "center") {
      const double j = 4.0 * static_cast<double>(idx % 5) - 8.0;
      pts.push_back({kMid + j, kMid + j});
    } else {
      throw Error(ErrorKind::no_chord_data, "unknown waypoint '" + wp + "'");
    }
  }
  return pts;
}

void crosscap_glyph(std::ostringstream& os, Pt p) {
  const double r = 11;
  os << "  <g class=\"crosscap\"><circle cx=\"" << num(p.x) << "\" cy=\"" << num(p.y) << "\" r=\"" << num(r)
     << "\" fill=\"white\" stroke=\"black\"/><path d=\"M" << num(p.x - 7) << " " << num(p.y - 7) << " L" << num(p.x + 7)
     << " " << num(p.y + 7) << " M" << num(p.x - 7) << " " << num(p.y + 7) << " L" << num(p.x + 7) << " "
     << num(p.y - 7) << "\" stroke=\"black\"/></g>\n";
}

void hole_glyph(std::ostringstream& os, Pt p) {
  os << "  <circle class=\"hole\" cx=\"" << num(p.x) << "\" cy=\"" << num(p.y)
     << "\" r=\"9\" fill=\"#444\" stroke=\"black\"/>\n";
}

}  // namespace

std::string export_svg(const CurveSystem& sys) {
  if (!sys.chords && !sys.members.empty()) throw Error(ErrorKind::no_chord_data, "system carries no chord data");
  if (sys.chords && sys.chords->paths.size() != sys.members.size())
    throw Error(ErrorKind::no_chord_data, "chord data does not cover every member");
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kSize << "\" height=\"" << kSize << "\" viewBox=\"0 0 "
     << kSize << " " << kSize << "\">\n";
  os << "  <title>" << format_surface(sys.surface) << " " << to_string(sys.kind) << ", " << sys.members.size()
     << " members</title>\n";
  if (!sys.chords) {
    os << "</svg>\n";
    return os.str();
  }
  const ChordData& d = *sys.chords;
  if (d.layout == ChordData::Layout::crosscap_circle) {
    os << "  <circle class=\"frame\" cx=\"" << num(kMid) << "\" cy=\"" << num(kMid) << "\" r=\"" << num(kRadius)
       << "\" fill=\"none\" stroke=\"#999\" stroke-dasharray=\"4 3\"/>\n";
  } else {
    os << "  <polygon class=\"frame\" points=\"";
    const int sides = std::max(d.polygon_sides, 3);
    for (int k = 0; k < sides; ++k) {
      const Pt p = polar(kRadius, 2 * std::numbers::pi * k / sides - std::numbers::pi / 2);
      os << (k ? " " : "") << num(p.x) << "," << num(p.y);
    }
    os << "\" fill=\"none\" stroke=\"#999\"/>\n";
  }
  for (std::size_t i = 0; i < sys.members.size(); ++i) {
    const auto pts = d.layout == ChordData::Layout::crosscap_circle ? circle_path(d, d.paths[i], i)
                                                                     : polygon_path(d, d.paths[i], i);
    os << "  <polyline class=\"curve\" data-member=\"" << i << "\" fill=\"none\" stroke=\"" << colour(i)
       << "\" stroke-width=\"1.6\" points=\"";
    for (std::size_t k = 0; k < pts.size(); ++k) os << (k ? " " : "") << num(pts[k].x) << "," << num(pts[k].y);
    os << "\"/>\n";
  }
  if (d.layout == ChordData::Layout::crosscap_circle) {
    crosscap_glyph(os, {kMid, kMid});
    const double m = static_cast<double>(std::max<std::size_t>(d.items.size(), 1));
    for (std::size_t k = 0; k < d.items.size(); ++k) {
      const Pt p = polar(kRadius, 2 * std::numbers::pi * static_cast<double>(k + 1) / m - std::numbers::pi / 2);
      if (d.items[k] == "crosscap") crosscap_glyph(os, p);
      else hole_glyph(os, p);
    }
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace curvesys
