#include "curvesys/holonomy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "curvesys/error.hpp"

namespace curvesys {

namespace {

constexpr int kMaxWalk = 100000;

struct ArcWalk {
  bool side = false;
  int side_index = -1;
  int a = -1, b = -1;
  Word letters;
  std::vector<Geodesicd> lines;  // one per tile, in that tile's coordinates
  std::vector<int> entry, exit;
};

}  // namespace

int HolonomyRep::side_of_letter(Letter l) const {
  const SidePairing& p = pairings.at(static_cast<size_t>(generator_of(l)));
  return l > 0 ? p.target : p.source;
}

Letter HolonomyRep::letter_of_side(int side) const { return side_letters.at(static_cast<size_t>(wrap(side))); }

Mobiusd HolonomyRep::image(const Word& w) const {
  Mobiusd m;
  for (Letter l : w) {
    const Mobiusd& g = images[static_cast<size_t>(generator_of(l))];
    m = m * (l > 0 ? g : g.inverse());
  }
  return m;
}

bool HolonomyRep::behind(int side, const IdealPointd& q) const {
  return interleave(vertex(side), vertex(side + 1), q, vertex(side + 2)) == Crossing::cross;
}

int HolonomyRep::vertex_at(const IdealPointd& q) const {
  for (int k = 0; k < side_count(); ++k)
    if (same_point(q, vertices[static_cast<size_t>(k)], 1e-11)) return k;
  return -1;
}

std::vector<Letter> identification_word(const SurfaceSig& sig, std::vector<std::string>* names) {
  std::vector<Letter> word;
  std::vector<std::string> nm;
  if (sig.orientable) {
    for (int i = 1; i <= sig.genus; ++i) {
      nm.push_back("a" + std::to_string(i));
      nm.push_back("b" + std::to_string(i));
    }
    for (int i = 0; i < 2 * sig.genus; ++i) word.push_back(letter_of(i));
    for (int i = 0; i < 2 * sig.genus; ++i) word.push_back(letter_of(i, true));
  } else {
    for (int i = 1; i <= sig.genus; ++i) nm.push_back("m" + std::to_string(i));
    for (int i = 0; i < sig.genus; ++i) {
      word.push_back(letter_of(i));
      word.push_back(letter_of(i));
    }
  }
  for (int j = 1; j < sig.boundaries; ++j) {
    const int gen = static_cast<int>(nm.size());
    nm.push_back("d" + std::to_string(j));
    word.push_back(letter_of(gen));
    word.push_back(letter_of(gen, true));
  }
  if (names) *names = nm;
  return word;
}

HolonomyRep build_holonomy(const SurfaceSig& sig, const std::vector<double>& shears) {
  if (sig.boundaries < 1 || euler_char(sig) >= 0)
    throw Error(ErrorKind::unsupported_surface,
                format_surface(sig) + " needs chi < 0 and at least one puncture");
  HolonomyRep rep;
  rep.surface = sig;
  rep.polygon_word = identification_word(sig, &rep.names);
  const int r = abs_euler_char(sig) + 1;
  const int m = 2 * r;
  if (static_cast<int>(rep.polygon_word.size()) != m || static_cast<int>(rep.names.size()) != r)
    throw Error(ErrorKind::precondition, "polygon word does not match the Euler characteristic");
  rep.shears = shears.empty() ? std::vector<double>(static_cast<size_t>(r), 0.0) : shears;
  if (static_cast<int>(rep.shears.size()) != r)
    throw Error(ErrorKind::precondition, "need one shear per generator");

  for (int k = 0; k < m - 1; ++k) rep.vertices.push_back(IdealPointd::real(k));
  rep.vertices.push_back(IdealPointd::infinity());

  // third vertex of the fan triangle on each side
  auto apex = [&](int side) { return side <= m - 3 ? m - 1 : (side == m - 2 ? m - 3 : 1); };

  rep.pairings.assign(static_cast<size_t>(r), SidePairing{-1, -1, false});
  for (int k = 0; k < m; ++k) {
    SidePairing& p = rep.pairings[static_cast<size_t>(generator_of(rep.polygon_word[static_cast<size_t>(k)]))];
    (p.source < 0 ? p.source : p.target) = k;
  }
  rep.side_letters.assign(static_cast<size_t>(m), 0);
  for (int x = 0; x < r; ++x) {
    SidePairing& p = rep.pairings[static_cast<size_t>(x)];
    rep.side_letters[static_cast<size_t>(p.source)] = letter_of(x, true);
    rep.side_letters[static_cast<size_t>(p.target)] = letter_of(x);
    auto ends = [&](int side) {
      const bool fwd = rep.polygon_word[static_cast<size_t>(side)] > 0;
      return std::pair{rep.vertex(fwd ? side : side + 1), rep.vertex(fwd ? side + 1 : side)};
    };
    auto [ps, qs] = ends(p.source);
    auto [pt, qt] = ends(p.target);
    IdealPointd across = Mobiusd::reflection(rep.vertex(p.target), rep.vertex(p.target + 1))
                             .apply(rep.vertex(apex(p.target)));
    const double sh = rep.shears[static_cast<size_t>(x)];
    if (sh != 0.0) {
      Mat2<double> basis;
      basis.col(0) = pt.h;
      basis.col(1) = qt.h;
      Mat2<double> slide = basis * Vec2<double>(std::exp(sh / 2), std::exp(-sh / 2)).asDiagonal() *
                           basis.inverse();
      across = {slide * across.h};
    }
    Mobiusd g = Mobiusd::from_three_points({ps, qs, rep.vertex(apex(p.source))}, {pt, qt, across});
    p.reversing = g.reversing();
    rep.images.push_back(g);
  }

  // cusp cycles: state = (vertex, side about to be crossed)
  rep.vertex_cusp.assign(static_cast<size_t>(m), -1);
  for (int v0 = 0; v0 < m; ++v0) {
    if (rep.vertex_cusp[static_cast<size_t>(v0)] >= 0) continue;
    const int cusp = static_cast<int>(rep.cusp_words.size());
    Word w;
    int v = v0, s = v0;
    for (int guard = 0;; ++guard) {
      if (guard > 4 * m) throw Error(ErrorKind::precondition, "vertex cycle does not close");
      rep.vertex_cusp[static_cast<size_t>(v)] = cusp;
      const Letter l = rep.letter_of_side(s);
      w.push_back(l);
      const Mobiusd back = rep.image({l}).inverse();
      const int nv = rep.vertex_at(back.apply(rep.vertex(v)));
      const int entered = rep.side_of_letter(-l);
      if (nv < 0) throw Error(ErrorKind::precondition, "pairing does not preserve polygon vertices");
      const int ns = entered == nv ? rep.wrap(nv - 1) : nv;
      v = nv;
      s = ns;
      if (v == v0) {
        if (s != v0) throw Error(ErrorKind::precondition, "vertex cycle reverses orientation");
        break;
      }
    }
    rep.cusp_words.push_back(cyclic_reduce(w));
  }
  if (static_cast<int>(rep.cusp_words.size()) != sig.boundaries)
    throw Error(ErrorKind::precondition, "vertex classes do not match the puncture count");
  for (const Word& w : rep.cusp_words)
    if (rep.image(w).classify() != IsometryType::parabolic)
      throw Error(ErrorKind::not_certified, "cusp holonomy is not parabolic; structure incomplete");
  return rep;
}

void to_json(nlohmann::json& j, const HolonomyRep& rep) {
  j = nlohmann::json::object();
  j["surface"] = rep.surface;
  nlohmann::json gens = nlohmann::json::array();
  for (int x = 0; x < rep.rank(); ++x) {
    const auto& mm = rep.images[static_cast<size_t>(x)].matrix();
    gens.push_back({{"name", rep.names[static_cast<size_t>(x)]},
                    {"matrix", {{mm(0, 0), mm(0, 1)}, {mm(1, 0), mm(1, 1)}}},
                    {"reversing", rep.images[static_cast<size_t>(x)].reversing()},
                    {"source_side", rep.pairings[static_cast<size_t>(x)].source},
                    {"target_side", rep.pairings[static_cast<size_t>(x)].target}});
  }
  j["generators"] = gens;
  j["polygon_word"] = rep.format(rep.polygon_word);
  nlohmann::json verts = nlohmann::json::array();
  for (const auto& v : rep.vertices) verts.push_back(v.is_infinity() ? nlohmann::json("inf") : nlohmann::json(v.value()));
  j["vertices"] = verts;
  nlohmann::json cw = nlohmann::json::array();
  for (const auto& w : rep.cusp_words) cw.push_back(rep.format(w));
  j["cusp_words"] = cw;
  j["shears"] = rep.shears;
}

bool curve_less(const CurveClass& a, const CurveClass& b) {
  if (a.kind != b.kind) return a.kind < b.kind;
  if (a.start != b.start) return a.start < b.start;
  if (a.word != b.word) return shortlex_less(a.word, b.word);
  return a.end < b.end;
}

namespace {

ArcWalk walk_arc(const HolonomyRep& rep, int start, const Word& w, int end) {
  const int m = rep.side_count();
  if (start < 0 || start >= m || end < 0 || end >= m)
    throw Error(ErrorKind::precondition, "arc endpoints must be polygon vertices");
  IdealPointd q = rep.image(w).apply(rep.vertex(end));
  if (same_point(rep.vertex(start), q, 1e-11))
    throw Error(ErrorKind::trivial_word, "arc endpoints coincide in the universal cover");
  ArcWalk out;
  int i = start;
  // rotate about the start cusp until the arc leaves it through the base tile
  for (int guard = 0;; ++guard) {
    if (guard > kMaxWalk) throw Error(ErrorKind::too_large, "arc normalisation did not settle");
    const int at = rep.vertex_at(q);
    if (at >= 0) {
      if (at == rep.wrap(i + 1) || at == rep.wrap(i - 1)) {
        out.side = true;
        out.side_index = at == rep.wrap(i + 1) ? i : rep.wrap(i - 1);
        out.a = i;
        out.b = at;
        return out;
      }
      break;
    }
    int k = -1;
    for (int s : {i, rep.wrap(i - 1)})
      if (rep.behind(s, q)) k = s;
    if (k < 0) break;
    const Mobiusd back = rep.image({rep.letter_of_side(k)}).inverse();
    q = back.apply(q);
    i = rep.vertex_at(back.apply(rep.vertex(i)));
  }
  out.a = i;
  IdealPointd p = rep.vertex(i);
  int entry = -1;
  for (int guard = 0;; ++guard) {
    if (guard > kMaxWalk) throw Error(ErrorKind::too_large, "arc walk did not terminate");
    out.lines.push_back({p, q});
    out.entry.push_back(entry);
    const int at = rep.vertex_at(q);
    if (at >= 0) {
      out.exit.push_back(-1);
      out.b = at;
      return out;
    }
    int k = -1;
    for (int s = 0; s < m && k < 0; ++s)
      if (s != entry && rep.behind(s, q)) k = s;
    if (k < 0) throw Error(ErrorKind::precondition, "arc lost inside the base tile");
    out.exit.push_back(k);
    const Letter l = rep.letter_of_side(k);
    out.letters.push_back(l);
    const Mobiusd back = rep.image({l}).inverse();
    p = back.apply(p);
    q = back.apply(q);
    entry = rep.side_of_letter(-l);
  }
}

CurveClass side_arc_class(const HolonomyRep& rep, int side) {
  const int gen = generator_of(rep.letter_of_side(side));
  const int s = rep.pairings[static_cast<size_t>(gen)].source;
  const int a = s, b = rep.wrap(s + 1);
  return CurveClass::arc(std::min(a, b), {}, std::max(a, b));
}

double ray_length(const Pointd& z, const IdealPointd& v) {
  return std::max(0.0, -std::log(ford_height(z, v.h)));
}

}  // namespace

bool is_side_arc(const HolonomyRep& rep, const CurveClass& cls) {
  if (cls.kind != CurveKind::arc || !cls.word.empty()) return false;
  return rep.wrap(cls.start - cls.end) == 1 || rep.wrap(cls.end - cls.start) == 1;
}

CurveClass canonicalize(const HolonomyRep& rep, const CurveClass& cls) {
  if (cls.kind == CurveKind::loop) return CurveClass::loop(canonical_cyclic(cls.word));
  ArcWalk wk = walk_arc(rep, cls.start, cls.word, cls.end);
  if (wk.side) return side_arc_class(rep, wk.side_index);
  CurveClass fwd = CurveClass::arc(wk.a, wk.letters, wk.b);
  CurveClass bwd = CurveClass::arc(wk.b, inverse(wk.letters), wk.a);
  return curve_less(bwd, fwd) ? bwd : fwd;
}

GeodesicRep geodesic_of(const HolonomyRep& rep, const CurveClass& cls) {
  GeodesicRep g;
  if (cls.kind == CurveKind::loop) {
    if (free_reduce(cls.word).empty()) throw Error(ErrorKind::trivial_word, "trivial loop word");
    const Mobiusd img = rep.image(cls.word);
    g.type = img.classify();
    if (g.type == IsometryType::parabolic)
      throw Error(ErrorKind::parabolic_class, "loop is homotopic into a cusp");
    if (g.type != IsometryType::hyperbolic && g.type != IsometryType::glide_reflection)
      throw Error(ErrorKind::precondition, "loop image has no axis");
    auto [rep_pt, att] = img.axis_endpoints();
    g.axis = {rep_pt, att};
    g.length = img.translation_length();
    g.glide = img.reversing();
    return g;
  }
  g.axis = {rep.vertex(cls.start), rep.image(cls.word).apply(rep.vertex(cls.end))};
  if (same_point(g.axis.from, g.axis.to, 1e-11))
    throw Error(ErrorKind::trivial_word, "arc endpoints coincide in the universal cover");
  for (const PLift& l : p_lifts(rep, cls)) g.length += l.length;
  return g;
}

Sidedness sidedness(const HolonomyRep& rep, const CurveClass& cls) {
  if (cls.kind != CurveKind::loop) throw Error(ErrorKind::arc_input, "sidedness is defined for loops");
  int odd = 0;
  for (Letter l : cls.word) odd ^= rep.images[static_cast<size_t>(generator_of(l))].reversing() ? 1 : 0;
  return odd ? Sidedness::one_sided : Sidedness::two_sided;
}

bool is_peripheral(const HolonomyRep& rep, const Word& w) {
  const Word c = canonical_cyclic(w);
  if (c.empty()) return false;
  for (const Word& cw : rep.cusp_words) {
    if (cw.empty() || c.size() % cw.size()) continue;
    if (canonical_cyclic(power(cw, static_cast<int>(c.size() / cw.size()))) == c) return true;
  }
  return false;
}

bool is_essential(const HolonomyRep& rep, const CurveClass& cls) {
  if (cls.kind == CurveKind::loop) {
    const Word c = cyclic_reduce(cls.word);
    return !c.empty() && !is_proper_power(c) && !is_peripheral(rep, c);
  }
  try {
    walk_arc(rep, cls.start, cls.word, cls.end);
    return true;
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::trivial_word) return false;
    throw;
  }
}

std::vector<PLift> p_lifts(const HolonomyRep& rep, const CurveClass& cls) {
  std::vector<PLift> out;
  constexpr double inf = std::numeric_limits<double>::infinity();
  if (cls.kind == CurveKind::loop) {
    const Word w = cyclic_reduce(cls.word);
    if (w.empty()) throw Error(ErrorKind::trivial_word, "trivial loop word");
    const int n = static_cast<int>(w.size());
    const int per = cyclic_period(w);
    for (int j = 0; j < per; ++j) {
      PLift l;
      const Word wj = rotate(w, j);
      const GeodesicRep g = geodesic_of(rep, CurveClass::loop(wj));
      l.line = g.axis;
      l.prefix.assign(w.begin(), w.begin() + j);
      l.entry_side = rep.side_of_letter(-w[static_cast<size_t>((j - 1 + n) % n)]);
      l.exit_side = rep.side_of_letter(w[static_cast<size_t>(j)]);
      GeodesicFrame<double> f(l.line);
      l.s_in = f.crossing_param(rep.vertex(l.entry_side), rep.vertex(l.entry_side + 1));
      l.s_out = f.crossing_param(rep.vertex(l.exit_side), rep.vertex(l.exit_side + 1));
      l.length = l.s_out - l.s_in;
      out.push_back(std::move(l));
    }
    return out;
  }
  ArcWalk wk = walk_arc(rep, cls.start, cls.word, cls.end);
  if (wk.side) {
    PLift l;
    l.line = {rep.vertex(wk.side_index), rep.vertex(wk.side_index + 1)};
    l.s_in = -inf;
    l.s_out = inf;
    l.length = std::max(0.0, 2 * std::log(std::abs(cross(l.line.from.h, l.line.to.h))));
    out.push_back(std::move(l));
    return out;
  }
  const IdealPointd& va = rep.vertex(wk.a);
  const IdealPointd& vb = rep.vertex(wk.b);
  for (size_t k = 0; k < wk.lines.size(); ++k) {
    PLift l;
    l.line = wk.lines[k];
    l.entry_side = wk.entry[k];
    l.exit_side = wk.exit[k];
    l.prefix.assign(wk.letters.begin(), wk.letters.begin() + static_cast<long>(k));
    GeodesicFrame<double> f(l.line);
    l.s_in = l.entry_side < 0 ? -inf
                              : f.crossing_param(rep.vertex(l.entry_side), rep.vertex(l.entry_side + 1));
    l.s_out = l.exit_side < 0 ? inf
                              : f.crossing_param(rep.vertex(l.exit_side), rep.vertex(l.exit_side + 1));
    if (l.entry_side >= 0 && l.exit_side >= 0) {
      l.length = l.s_out - l.s_in;
    } else if (l.entry_side < 0 && l.exit_side < 0) {
      l.length = std::max(0.0, 2 * std::log(std::abs(cross(va.h, vb.h))));
    } else if (l.entry_side < 0) {
      l.length = ray_length(f.point(l.s_out), va);
    } else {
      l.length = ray_length(f.point(l.s_in), vb);
    }
    out.push_back(std::move(l));
  }
  return out;
}

int side_pair_crossings(const HolonomyRep& rep, const CurveClass& cls, int gen) {
  Word letters;
  if (cls.kind == CurveKind::loop) {
    letters = cyclic_reduce(cls.word);
  } else {
    ArcWalk wk = walk_arc(rep, cls.start, cls.word, cls.end);
    if (wk.side) return 0;
    letters = wk.letters;
  }
  return static_cast<int>(std::count_if(letters.begin(), letters.end(),
                                        [&](Letter l) { return generator_of(l) == gen; }));
}

std::string format_curve(const HolonomyRep& rep, const CurveClass& cls) {
  if (cls.kind == CurveKind::loop) return rep.format(cls.word);
  return std::to_string(cls.start) + ":" + rep.format(cls.word) + ":" + std::to_string(cls.end);
}

CurveClass parse_curve(const HolonomyRep& rep, const std::string& text) {
  const auto c1 = text.find(':');
  if (c1 == std::string::npos) return CurveClass::loop(rep.parse(text));
  const auto c2 = text.find(':', c1 + 1);
  if (c2 == std::string::npos) throw Error(ErrorKind::parse_error, "arc must read start:word:end");
  try {
    return CurveClass::arc(std::stoi(text.substr(0, c1)), rep.parse(text.substr(c1 + 1, c2 - c1 - 1)),
                           std::stoi(text.substr(c2 + 1)));
  } catch (const std::logic_error&) {
    throw Error(ErrorKind::parse_error, "bad arc endpoints in '" + text + "'");
  }
}

}  // namespace curvesys
