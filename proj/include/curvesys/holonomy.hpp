#pragma once

#include <string>
#include <vector>

#include "curvesys/hyperbolic.hpp"
#include "curvesys/surface.hpp"
#include "curvesys/word.hpp"
#include "json.hpp"

namespace curvesys {

/// Side k of the base polygon runs from vertex k to vertex k+1 (mod 2r), counterclockwise.
struct SidePairing {
  int source = 0;  // first occurrence in the polygon word; crossing it reads x^-1
  int target = 0;  // second occurrence; crossing it reads x
  bool reversing = false;
};

/// Complete hyperbolic structure on a punctured surface, developed from an ideal 2r-gon
/// (r = |chi| + 1) with vertices 0, 1, ..., 2r-2, inf and side pairings built from
/// the fan triangulation at inf. With zero shears every pairing lies in PGL(2,Z).
class HolonomyRep {
 public:
  SurfaceSig surface;
  std::vector<std::string> names;
  std::vector<Mobiusd> images;
  std::vector<SidePairing> pairings;
  std::vector<Letter> polygon_word;  // label of each side, in side order
  std::vector<IdealPointd> vertices;
  std::vector<int> vertex_cusp;  // cusp index of each polygon vertex
  std::vector<Word> cusp_words;  // cyclically reduced, one per cusp
  std::vector<double> shears;
  std::vector<Letter> side_letters;  // letter_of_side cache

  int rank() const { return static_cast<int>(images.size()); }
  int side_count() const { return static_cast<int>(vertices.size()); }
  const IdealPointd& vertex(int k) const { return vertices[static_cast<size_t>(wrap(k))]; }
  int wrap(int k) const {
    const int m = side_count();
    return ((k % m) + m) % m;
  }

  /// Side crossed when a path leaves the base tile reading letter l.
  int side_of_letter(Letter l) const;
  /// Letter read when leaving the base tile through side k.
  Letter letter_of_side(int side) const;

  Mobiusd image(const Word& w) const;

  /// Is q strictly beyond side k, i.e. outside the polygon across that side?
  bool behind(int side, const IdealPointd& q) const;
  /// Index of the polygon vertex at q, or -1.
  int vertex_at(const IdealPointd& q) const;

  Word parse(const std::string& text) const { return parse_word(text, names); }
  std::string format(const Word& w) const { return format_word(w, names); }
};

/// Polygon identification word. Crosscaps read m1 m1 m2 m2 ..., handles use the
/// opposite-side pattern x1 .. x2g x1^-1 .. x2g^-1, and each puncture after the first adds d d^-1.
std::vector<Letter> identification_word(const SurfaceSig& sig, std::vector<std::string>* names);

/// `shears` (one per generator, default zero) slide each pairing along its target side.
HolonomyRep build_holonomy(const SurfaceSig& sig, const std::vector<double>& shears = {});

void to_json(nlohmann::json& j, const HolonomyRep& rep);

enum class CurveKind { loop, arc };

/// Loops carry a cyclic word. Arcs run from polygon vertex `start` to image(word)(vertex `end`).
struct CurveClass {
  CurveKind kind = CurveKind::loop;
  Word word;
  int start = -1;
  int end = -1;

  static CurveClass loop(Word w) { return {CurveKind::loop, std::move(w), -1, -1}; }
  static CurveClass arc(int start, Word w, int end) { return {CurveKind::arc, std::move(w), start, end}; }

  bool operator==(const CurveClass&) const = default;
};

bool curve_less(const CurveClass& a, const CurveClass& b);

enum class Sidedness { one_sided, two_sided };

struct GeodesicRep {
  Geodesicd axis;  // loops: repelling -> attracting; arcs: start -> end
  double length = 0;  // translation length; for arcs the length outside the Ford horoballs
  bool glide = false;
  IsometryType type = IsometryType::hyperbolic;
};

/// Portion of one lift inside the base polygon.
struct PLift {
  Geodesicd line;
  int entry_side = -1;  // -1 when the lift starts at a polygon vertex
  int exit_side = -1;   // -1 when the lift ends at a polygon vertex
  double s_in = 0, s_out = 0;
  double length = 0;
  Word prefix;  // deck element g with line = g^-1 (base lift)
};

bool is_side_arc(const HolonomyRep& rep, const CurveClass& cls);

/// Canonical representative: least rotation of the word or its inverse for loops; for arcs
/// the least of the two directed walks starting in the base tile.
CurveClass canonicalize(const HolonomyRep& rep, const CurveClass& cls);

GeodesicRep geodesic_of(const HolonomyRep& rep, const CurveClass& cls);
Sidedness sidedness(const HolonomyRep& rep, const CurveClass& cls);
bool is_essential(const HolonomyRep& rep, const CurveClass& cls);
bool is_peripheral(const HolonomyRep& rep, const Word& w);

/// All lifts meeting the interior of the base polygon, in order along the curve.
std::vector<PLift> p_lifts(const HolonomyRep& rep, const CurveClass& cls);

/// Number of times the curve crosses the side pair of generator `gen`.
int side_pair_crossings(const HolonomyRep& rep, const CurveClass& cls, int gen);

std::string format_curve(const HolonomyRep& rep, const CurveClass& cls);
CurveClass parse_curve(const HolonomyRep& rep, const std::string& text);

}  // namespace curvesys
