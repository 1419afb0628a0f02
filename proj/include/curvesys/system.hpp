#pragma once

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "curvesys/holonomy.hpp"
#include "json.hpp"

namespace curvesys {

enum class SystemKind { loops, arcs };

enum class ValidationState { unchecked, valid_k_system, valid_complete_k_system, invalid };

struct Validation {
  ValidationState state = ValidationState::unchecked;
  int k = 0;
  std::string reason;  // set when invalid
  int member = -1;     // offending member, if any
};

/// Drawing hints for export_svg. Waypoints are symbolic: `center`, `item:K`, `gap:K`, `out:K`
/// on the crosscap circle; `side:K`, `vertex:K`, `center` on a polygon.
struct ChordData {
  enum class Layout { crosscap_circle, polygon };
  Layout layout = Layout::crosscap_circle;
  int polygon_sides = 0;
  std::vector<std::string> items;  // circle slots in order: "crosscap" or "hole"
  std::vector<std::vector<std::string>> paths;
};

struct CurveSystem {
  SurfaceSig surface;
  SystemKind kind = SystemKind::loops;
  std::vector<CurveClass> members;
  std::vector<std::string> labels;  // construction type per member, may be empty
  std::optional<Eigen::MatrixXi> pairwise;  // diagonal holds self-intersections
  Validation validation;
  std::optional<ChordData> chords;

  std::size_t size() const { return members.size(); }
};

/// Fills the pairwise table with certified counts and sets the validation state.
/// Member problems (inessential, non-simple, duplicate, count above k) mark the system invalid;
/// letters or vertices outside the rep throw InvalidMember.
CurveSystem validate(const HolonomyRep& rep, CurveSystem sys, int k = 1, bool complete = true, int workers = 0);

CurveSystem construct_prop1(int g, int n);
/// Complete 1-system with t two-sided members; t = c is accepted for odd c.
CurveSystem construct_thm1(int c, int n, int t);
CurveSystem construct_thm5(int c, int n);
CurveSystem construct_arc_polygon(const SurfaceSig& sig);

/// Loops named in the rep's alphabet, one word per entry.
CurveSystem system_from_words(const HolonomyRep& rep, SystemKind kind, const std::vector<std::string>& words);

std::string to_string(ValidationState s);
std::string to_string(SystemKind k);

/// Words use the generator names of identification_word(surface).
nlohmann::json system_to_json(const CurveSystem& sys);
/// Inverse of system_to_json (chord data and labels included).
CurveSystem system_from_json(const nlohmann::json& j);

struct SearchOptions {
  SystemKind kind = SystemKind::loops;
  int k = 1;
  bool complete = true;
  int max_word_len = 6;
  long long node_budget = 50'000'000;
  double time_budget_s = 0;  // 0 = unlimited
  int workers = 0;
};

struct SearchCertificate {
  int max_word_len = 0;
  std::size_t enumerated = 0;  // canonical candidates before filters
  std::size_t pool_size = 0;   // essential simple classes
  std::size_t edges = 0;
  long long nodes = 0;
  bool exhaustive = false;
  CurveSystem best;
};

/// Exact maximum clique in the compatibility graph of all essential simple classes up to
/// max_word_len. Running out of budget returns the best system so far with exhaustive unset.
SearchCertificate search_max(const HolonomyRep& rep, const SearchOptions& opts);

/// Essential simple classes with words of length <= max_len, sorted by canonical shortlex.
std::vector<CurveClass> curve_pool(const HolonomyRep& rep, SystemKind kind, int max_len, std::size_t* enumerated = nullptr,
                                   int workers = 0);

nlohmann::json certificate_to_json(const SearchCertificate& cert);

/// Deterministic SVG rendering of the chord data. Throws NoChordData.
std::string export_svg(const CurveSystem& sys);

}  // namespace curvesys
