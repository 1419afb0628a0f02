#include "curvesys/system.hpp"

#include "curvesys/error.hpp"
#include "curvesys/intersection.hpp"
#include "curvesys/parallel.hpp"

namespace curvesys {

std::string to_string(ValidationState s) {
  switch (s) {
    case ValidationState::unchecked: return "unchecked";
    case ValidationState::valid_k_system: return "valid_k_system";
    case ValidationState::valid_complete_k_system: return "valid_complete_k_system";
    case ValidationState::invalid: return "invalid";
  }
  return "?";
}

std::string to_string(SystemKind k) { return k == SystemKind::loops ? "loops" : "arcs"; }

namespace {

ValidationState state_from_string(const std::string& s) {
  for (auto v : {ValidationState::unchecked, ValidationState::valid_k_system,
                 ValidationState::valid_complete_k_system, ValidationState::invalid})
    if (to_string(v) == s) return v;
  throw Error(ErrorKind::parse_error, "unknown validation state '" + s + "'");
}

Validation invalid(int member, std::string reason) {
  Validation v;
  v.state = ValidationState::invalid;
  v.member = member;
  v.reason = std::move(reason);
  return v;
}

void check_supported(const HolonomyRep& rep, const CurveSystem& sys, std::size_t i) {
  const CurveClass& c = sys.members[i];
  const int idx = static_cast<int>(i);
  if ((c.kind == CurveKind::loop) != (sys.kind == SystemKind::loops))
    throw Error(ErrorKind::invalid_member, "member " + std::to_string(idx) + ": curve kind does not match system kind");
  for (Letter l : c.word)
    if (l == 0 || generator_of(l) >= rep.rank())
      throw Error(ErrorKind::invalid_member, "member " + std::to_string(idx) + ": letter outside the generating set");
  if (c.kind == CurveKind::arc &&
      (c.start < 0 || c.end < 0 || c.start >= rep.side_count() || c.end >= rep.side_count()))
    throw Error(ErrorKind::invalid_member, "member " + std::to_string(idx) + ": arc endpoint is not a polygon vertex");
}

std::string inessential_reason(const CurveClass& c) {
  if (c.kind == CurveKind::arc) return "trivial arc";
  const Word core = cyclic_reduce(c.word);
  if (core.empty()) return "trivial member";
  if (is_proper_power(core)) return "non-primitive member";
  return "peripheral member";
}

IntersectionResult certified(IntersectionResult r, const std::string& what) {
  if (!r.certified) throw Error(ErrorKind::uncertified, what + " not certified");
  return r;
}

}  // namespace

CurveSystem validate(const HolonomyRep& rep, CurveSystem sys, int k, bool complete, int workers) {
  if (k < 1) throw Error(ErrorKind::precondition, "k must be positive");
  if (sys.surface != rep.surface) throw Error(ErrorKind::precondition, "system and holonomy surfaces differ");
  const std::size_t m = sys.members.size();
  sys.pairwise.reset();
  for (std::size_t i = 0; i < m; ++i) check_supported(rep, sys, i);

  std::vector<CurveClass> canon(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (!is_essential(rep, sys.members[i])) {
      sys.validation = invalid(static_cast<int>(i), inessential_reason(sys.members[i]));
      return sys;
    }
    canon[i] = canonicalize(rep, sys.members[i]);
  }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (canon[i] == canon[j]) {
        sys.validation = invalid(static_cast<int>(i), "duplicate of member " + std::to_string(j));
        return sys;
      }

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i; j < m; ++j) pairs.emplace_back(i, j);
  std::vector<int> counts(pairs.size());
  parallel_for(
      pairs.size(),
      [&](std::size_t p) {
        const auto [i, j] = pairs[p];
        const std::string what = "pair (" + std::to_string(i) + "," + std::to_string(j) + ")";
        try {
          counts[p] = i == j ? certified(self_intersection(rep, canon[i]), what).count
                             : certified(intersection_number(rep, canon[i], canon[j]), what).count;
        } catch (const Error& e) {
          if (e.kind() == ErrorKind::not_certified) throw Error(ErrorKind::uncertified, what + ": " + e.what());
          throw;
        }
      },
      workers);

  Eigen::MatrixXi table(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(m));
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    const auto [i, j] = pairs[p];
    table(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = counts[p];
    table(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i)) = counts[p];
  }
  sys.pairwise = table;

  bool all_equal = true;
  for (std::size_t i = 0; i < m; ++i) {
    const auto ii = static_cast<Eigen::Index>(i);
    if (table(ii, ii) != 0) {
      sys.validation = invalid(static_cast<int>(i), "member is not simple");
      return sys;
    }
    for (std::size_t j = i + 1; j < m; ++j) {
      const int x = table(ii, static_cast<Eigen::Index>(j));
      if (x > k) {
        sys.validation = invalid(static_cast<int>(j), "members " + std::to_string(i) + " and " + std::to_string(j) +
                                                          " meet " + std::to_string(x) + " times");
        return sys;
      }
      all_equal = all_equal && x == k;
    }
  }
  if (complete && !all_equal) {
    sys.validation = invalid(-1, "not every pair meets exactly " + std::to_string(k) + " times");
    return sys;
  }
  sys.validation.state = all_equal ? ValidationState::valid_complete_k_system : ValidationState::valid_k_system;
  sys.validation.k = k;
  sys.validation.reason.clear();
  sys.validation.member = -1;
  return sys;
}

// Crosscap-circle model: the central crosscap is m1; the circle carries m2..mc and then the
// n holes. Loops are written with circle items m_j^2 (crosscap) and d_j (hole), last hole implicit.
namespace {

struct CircleModel {
  int c, n;
  std::vector<Word> items;  // 1-based via item(i)

  CircleModel(int c_, int n_) : c(c_), n(n_) {
    for (int j = 2; j <= c; ++j) items.push_back({mu(j), mu(j)});
    for (int j = 1; j <= n - 1; ++j) items.push_back({letter_of(c + j - 1)});
    if (n == 0 && !items.empty()) items.back().clear();  // closed: last crosscap is the implicit slot
    else items.push_back({});
  }
  static Letter mu(int j) { return letter_of(j - 1); }
  int slots() const { return static_cast<int>(items.size()); }
  // Items hi, hi-1, ..., lo.
  Word prod(int lo, int hi) const {
    Word w;
    for (int i = hi; i >= lo; --i) w.insert(w.end(), items[static_cast<size_t>(i - 1)].begin(), items[static_cast<size_t>(i - 1)].end());
    return w;
  }
  ChordData chords() const {
    ChordData d;
    d.layout = ChordData::Layout::crosscap_circle;
    for (int j = 2; j <= c; ++j) d.items.push_back("crosscap");
    for (int j = 1; j <= n; ++j) d.items.push_back("hole");
    return d;
  }
};

std::string item(int i) { return "item:" + std::to_string(i); }
std::string gap(int g) { return "gap:" + std::to_string(g); }
std::string out(int g) { return "out:" + std::to_string(g); }

void add(CurveSystem& sys, const std::string& label, Word w, std::vector<std::string> path) {
  sys.members.push_back(CurveClass::loop(free_reduce(w)));
  sys.labels.push_back(label);
  sys.chords->paths.push_back(std::move(path));
}

// Loops through two gaps of the circle and around the outside.
void add_type4(CurveSystem& sys, const CircleModel& cm) {
  const int m = cm.slots();
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b) {
      Word w{CircleModel::mu(1)};
      const Word x = cm.prod(a + 1, b);
      w.insert(w.end(), x.begin(), x.end());
      add(sys, "IV", w, {"center", gap(a), out(a), out(b), gap(b), "center"});
    }
}

}  // namespace

CurveSystem construct_thm1(int c, int n, int t) {
  if (c < 1 || n < 0) throw Error(ErrorKind::precondition, "need c >= 1 and n >= 0");
  const bool odd_all = t == c && c % 2 == 1;
  if (!odd_all && (t < 0 || t > c - 1))
    throw Error(ErrorKind::bad_t, "t must lie in [0, c-1], or equal c for odd c");
  CircleModel cm(c, n);
  CurveSystem sys;
  sys.surface = SurfaceSig::non_orientable(c, n);
  sys.chords = cm.chords();
  const Letter m1 = CircleModel::mu(1);
  if (odd_all) {
    for (int j = 2; j <= c; ++j) add(sys, "II", {m1, CircleModel::mu(j)}, {"center", item(j - 1)});
    Word w{m1, m1};
    std::vector<std::string> path{"center"};
    for (int j = c; j >= 2; --j) {
      w.push_back(CircleModel::mu(j));
      path.push_back(item(j - 1));
    }
    path.push_back("center");
    add(sys, "V", w, path);
    return sys;
  }
  add(sys, "I", {m1}, {"ring"});
  for (int j = 2; j <= t + 1; ++j) add(sys, "II", {m1, CircleModel::mu(j)}, {"center", item(j - 1)});
  for (int j = t + 2; j + 1 <= c; j += 2)
    add(sys, "III", {m1, CircleModel::mu(j + 1), CircleModel::mu(j)}, {"center", item(j), item(j - 1), "center"});
  add_type4(sys, cm);
  return sys;
}

CurveSystem construct_thm5(int c, int n) {
  const SurfaceSig sig = SurfaceSig::non_orientable(c, n);
  if (c < 1 || n < 0 || euler_char(sig) >= 0) throw Error(ErrorKind::precondition, "need chi < 0");
  CircleModel cm(c, n);
  const int m = cm.slots();
  CurveSystem sys;
  sys.surface = sig;
  sys.chords = cm.chords();
  const Letter m1 = CircleModel::mu(1);
  add(sys, "I", {m1}, {"ring"});
  // II: through crosscap j (slot p) and one gap other than the one just left of it.
  for (int j = 2; j <= c; ++j) {
    const int p = j - 1;
    for (int g = 0; g < m; ++g) {
      if (g == p - 1) continue;
      Word w{m1};
      const Letter mj = CircleModel::mu(j);
      if (g == p) {
        w.push_back(mj);
      } else if (g < p - 1) {
        w.push_back(mj);
        const Word x = cm.prod(g + 1, p - 1);
        w.insert(w.end(), x.begin(), x.end());
      } else {
        const Word x = cm.prod(p + 1, g);
        w.insert(w.end(), x.begin(), x.end());
        w.push_back(mj);
      }
      add(sys, "II", w, {"center", item(p), gap(g), "center"});
    }
  }
  for (int j = 2; j <= c; ++j)
    for (int k = j + 1; k <= c; ++k) {
      Word w{m1, CircleModel::mu(k)};
      const Word x = cm.prod(j, k - 2);
      w.insert(w.end(), x.begin(), x.end());
      w.push_back(CircleModel::mu(j));
      add(sys, "III", w, {"center", item(k - 1), item(j - 1), "center"});
    }
  add_type4(sys, cm);
  return sys;
}

CurveSystem construct_prop1(int g, int n) {
  if (g < 1 || n < 0) throw Error(ErrorKind::precondition, "need g >= 1 and n >= 0");
  CurveSystem sys;
  sys.surface = SurfaceSig::orientable_surface(g, n);
  sys.chords = ChordData{};
  sys.chords->layout = ChordData::Layout::polygon;
  sys.chords->polygon_sides = 4 * g;
  for (int i = 0; i < 2 * g; ++i) {
    sys.members.push_back(CurveClass::loop({letter_of(i)}));
    sys.labels.push_back("side");
    sys.chords->paths.push_back({"side:" + std::to_string(i), "side:" + std::to_string(i + 2 * g)});
  }
  Word diag;
  for (int i = 0; i < 2 * g; ++i) diag.push_back(letter_of(i, i % 2 == 1));
  sys.members.push_back(CurveClass::loop(diag));
  sys.labels.push_back("diagonal");
  sys.chords->paths.push_back({"vertex:0", "center", "vertex:" + std::to_string(2 * g)});
  return sys;
}

CurveSystem construct_arc_polygon(const SurfaceSig& sig) {
  validate(sig);
  if (sig.boundaries < 1 || euler_char(sig) >= 0)
    throw Error(ErrorKind::unsupported_surface, "arc polygon needs chi < 0 and at least one cusp");
  const HolonomyRep rep = build_holonomy(sig);
  const int sides = rep.side_count();
  CurveSystem sys;
  sys.surface = sig;
  sys.kind = SystemKind::arcs;
  sys.chords = ChordData{};
  sys.chords->layout = ChordData::Layout::polygon;
  sys.chords->polygon_sides = sides;
  for (int s = 0; s < sides; ++s) {
    if (rep.letter_of_side(s) > 0) continue;  // one arc per side pair, drawn on its source side
    sys.members.push_back(canonicalize(rep, CurveClass::arc(s, {}, rep.wrap(s + 1))));
    sys.labels.push_back("side");
    sys.chords->paths.push_back({"vertex:" + std::to_string(s), "vertex:" + std::to_string(rep.wrap(s + 1))});
  }
  for (int i = 0; i < sides; ++i)
    for (int j = i + 2; j < sides; ++j) {
      if (i == 0 && j == sides - 1) continue;
      sys.members.push_back(canonicalize(rep, CurveClass::arc(i, {}, j)));
      sys.labels.push_back("diagonal");
      sys.chords->paths.push_back({"vertex:" + std::to_string(i), "vertex:" + std::to_string(j)});
    }
  return sys;
}

CurveSystem system_from_words(const HolonomyRep& rep, SystemKind kind, const std::vector<std::string>& words) {
  CurveSystem sys;
  sys.surface = rep.surface;
  sys.kind = kind;
  for (const std::string& w : words) sys.members.push_back(parse_curve(rep, w));
  return sys;
}

namespace {

std::vector<std::string> alphabet(const SurfaceSig& sig) {
  std::vector<std::string> names;
  identification_word(sig, &names);
  return names;
}

std::string layout_name(ChordData::Layout l) {
  return l == ChordData::Layout::polygon ? "polygon" : "crosscap_circle";
}

}  // namespace

nlohmann::json system_to_json(const CurveSystem& sys) {
  const auto names = alphabet(sys.surface);
  nlohmann::json j;
  j["surface"] = format_surface(sys.surface);
  j["kind"] = to_string(sys.kind);
  j["size"] = sys.members.size();
  nlohmann::json members = nlohmann::json::array();
  for (std::size_t i = 0; i < sys.members.size(); ++i) {
    const CurveClass& c = sys.members[i];
    nlohmann::json m;
    m["word"] = c.kind == CurveKind::loop ? format_word(c.word, names)
                                           : std::to_string(c.start) + ":" + format_word(c.word, names) + ":" +
                                                 std::to_string(c.end);
    if (i < sys.labels.size()) m["type"] = sys.labels[i];
    if (sys.chords && i < sys.chords->paths.size()) m["chord"] = sys.chords->paths[i];
    members.push_back(m);
  }
  j["members"] = members;
  if (sys.chords) {
    j["chords"] = {{"layout", layout_name(sys.chords->layout)},
                   {"polygon_sides", sys.chords->polygon_sides},
                   {"items", sys.chords->items}};
  }
  if (sys.pairwise) {
    nlohmann::json rows = nlohmann::json::array();
    for (Eigen::Index r = 0; r < sys.pairwise->rows(); ++r) {
      std::vector<int> row;
      for (Eigen::Index c = 0; c < sys.pairwise->cols(); ++c) row.push_back((*sys.pairwise)(r, c));
      rows.push_back(row);
    }
    j["pairwise"] = rows;
  } else {
    j["pairwise"] = nullptr;
  }
  nlohmann::json v{{"state", to_string(sys.validation.state)}};
  if (sys.validation.k) v["k"] = sys.validation.k;
  if (!sys.validation.reason.empty()) v["reason"] = sys.validation.reason;
  if (sys.validation.member >= 0) v["member"] = sys.validation.member;
  j["validation"] = v;
  return j;
}

CurveSystem system_from_json(const nlohmann::json& j) {
  CurveSystem sys;
  try {
    sys.surface = parse_surface(j.at("surface").get<std::string>());
    sys.kind = j.at("kind").get<std::string>() == "arcs" ? SystemKind::arcs : SystemKind::loops;
    const auto names = alphabet(sys.surface);
    const nlohmann::json& ch = j.contains("chords") ? j["chords"] : nlohmann::json();
    if (ch.is_object()) {
      ChordData d;
      d.layout = ch.at("layout") == "polygon" ? ChordData::Layout::polygon : ChordData::Layout::crosscap_circle;
      d.polygon_sides = ch.value("polygon_sides", 0);
      d.items = ch.value("items", std::vector<std::string>{});
      sys.chords = d;
    }
    for (const auto& m : j.at("members")) {
      const std::string text = m.at("word").get<std::string>();
      const auto c1 = text.find(':');
      if (c1 == std::string::npos) {
        sys.members.push_back(CurveClass::loop(parse_word(text, names)));
      } else {
        const auto c2 = text.find(':', c1 + 1);
        if (c2 == std::string::npos) throw Error(ErrorKind::parse_error, "arc must read start:word:end");
        sys.members.push_back(CurveClass::arc(std::stoi(text.substr(0, c1)),
                                              parse_word(text.substr(c1 + 1, c2 - c1 - 1), names),
                                              std::stoi(text.substr(c2 + 1))));
      }
      if (m.contains("type")) sys.labels.push_back(m["type"].get<std::string>());
      if (sys.chords && m.contains("chord")) sys.chords->paths.push_back(m["chord"].get<std::vector<std::string>>());
    }
    if (j.contains("pairwise") && j["pairwise"].is_array()) {
      const auto rows = j["pairwise"].get<std::vector<std::vector<int>>>();
      Eigen::MatrixXi t(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.size()));
      for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < rows[r].size() && c < rows.size(); ++c)
          t(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = rows[r][c];
      sys.pairwise = t;
    }
    if (j.contains("validation")) {
      const auto& v = j["validation"];
      sys.validation.state = state_from_string(v.at("state").get<std::string>());
      sys.validation.k = v.value("k", 0);
      sys.validation.reason = v.value("reason", std::string());
      sys.validation.member = v.value("member", -1);
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::parse_error, std::string("system JSON: ") + e.what());
  } catch (const std::logic_error& e) {
    throw Error(ErrorKind::parse_error, std::string("system JSON: ") + e.what());
  }
  if (sys.labels.size() != sys.members.size()) sys.labels.clear();
  if (sys.chords && sys.chords->paths.size() != sys.members.size()) sys.chords.reset();
  return sys;
}

}  // namespace curvesys
