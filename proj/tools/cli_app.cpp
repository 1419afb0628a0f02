#include "cli_app.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <regex>
#include <sstream>

#include "CLI11.hpp"
#include "curvesys/bounds.hpp"
#include "curvesys/error.hpp"
#include "curvesys/intersection.hpp"
#include "curvesys/lasso.hpp"
#include "curvesys/nib.hpp"
#include "curvesys/parallel.hpp"
#include "curvesys/report.hpp"
#include "curvesys/surface.hpp"
#include "curvesys/system.hpp"

namespace curvesys::cli {

namespace {

using nlohmann::json;

constexpr int kSchemaVersion = 1;

struct Options {
  int workers = 0;
  std::string out_path;
  std::string format = "json";

  std::string surface;
  std::string theorem = "1";
  int t = 0;
  bool validate = true;
  std::string svg_path;

  std::string system_path;
  int k = 1;
  bool incomplete = false;
  bool witnesses = false;

  std::string kind = "loops";
  int max_len = 6;
  long long node_budget = 50'000'000;
  double time_budget = 0;

  std::string range = "c=1..6,n=0..6";

  std::string lasso_case = "op";
  int samples = 10000;
  std::uint64_t seed = 1;
  double t_lo = 0, t_hi = 0, c_lo = 0.5, c_hi = 10;
  bool spiral = false;
  double spiral_t = 1, spiral_c = 1;

  int slit_samples = 200;
  int points = 500;
  std::string corrupt;
};

bool usage_kind(ErrorKind k) {
  switch (k) {
    case ErrorKind::parse_error:
    case ErrorKind::invalid_surface:
    case ErrorKind::unsupported_surface:
    case ErrorKind::bad_t:
    case ErrorKind::unsupported_query:
    case ErrorKind::invalid_member:
    case ErrorKind::no_chord_data:
      return true;
    default:
      return false;
  }
}

CurveSystem load_system(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::parse_error, "cannot read " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::parse_error, path + ": " + e.what());
  }
  // construct/verify reports wrap the system in an envelope
  return system_from_json(j.contains("schema") && j.contains("result") ? j["result"] : j);
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorKind::parse_error, "cannot write " + path);
  f << text;
}

std::pair<int, int> parse_span(const std::string& text, const std::string& key) {
  const std::regex re(key + "=(-?\\d+)\\.\\.(-?\\d+)");
  std::smatch m;
  if (!std::regex_search(text, m, re)) throw Error(ErrorKind::parse_error, "range needs " + key + "=lo..hi");
  return {std::stoi(m[1]), std::stoi(m[2])};
}

std::string bounds_text(const ConsistencyReport& r) {
  std::ostringstream os;
  auto opt = [](const std::optional<std::int64_t>& v) { return v ? std::to_string(*v) : std::string("-"); };
  os << "c\tn\tchi\tthm1(t=0..c-1)\tcor1\tthm2\tthm5\tgap\n";
  for (const auto& row : r.rows) {
    std::string t1;
    for (std::size_t i = 0; i < row.thm1_by_t.size(); ++i) t1 += (i ? "," : "") + std::to_string(row.thm1_by_t[i]);
    os << row.c << '\t' << row.n << '\t' << row.chi << '\t' << (t1.empty() ? "-" : t1) << '\t' << row.cor1 << '\t'
       << opt(row.thm2) << '\t' << opt(row.thm5) << '\t' << opt(row.gap) << '\n';
  }
  os << "checks\t" << r.checks << "\nviolations\t" << r.violations.size() << '\n';
  for (const auto& v : r.violations) os << "violation\t" << v << '\n';
  return os.str();
}

std::string lasso_csv(const RegionReport& r) {
  std::ostringstream os;
  os << "field,value\ncase," << to_string(r.kase) << "\nsamples," << r.samples << "\nrejected," << r.rejected
     << "\nmin_R," << fmt_num(r.min_R) << "\nmax_R," << fmt_num(r.max_R) << "\nmin_margin," << fmt_num(r.min_margin)
     << "\nviolations," << r.violations.size() << "\n";
  if (!r.violations.empty()) {
    os << "t,c,R\n";
    for (const auto& v : r.violations) os << fmt_num(v.t) << ',' << fmt_num(v.c) << ',' << fmt_num(v.R) << '\n';
  }
  return os.str();
}

json envelope(const std::string& command, json config, json result, bool ok) {
  return {{"schema", "curvesys." + command}, {"schema_version", kSchemaVersion}, {"config", std::move(config)},
          {"result", std::move(result)}, {"status", ok ? "ok" : "violations"}};
}

struct Outcome {
  std::string text;
  bool ok = true;
};

Outcome do_construct(const Options& o) {
  const SurfaceSig sig = parse_surface(o.surface);
  CurveSystem sys;
  if (o.theorem == "1") {
    if (sig.orientable) throw Error(ErrorKind::unsupported_surface, "theorem 1 needs N:c,n");
    sys = construct_thm1(sig.genus, sig.boundaries, o.t);
  } else if (o.theorem == "5") {
    if (sig.orientable) throw Error(ErrorKind::unsupported_surface, "theorem 5 needs N:c,n");
    sys = construct_thm5(sig.genus, sig.boundaries);
  } else if (o.theorem == "prop1") {
    if (!sig.orientable) throw Error(ErrorKind::unsupported_surface, "prop1 needs S:g,n");
    sys = construct_prop1(sig.genus, sig.boundaries);
  } else if (o.theorem == "arcs") {
    sys = construct_arc_polygon(sig);
  } else {
    throw Error(ErrorKind::parse_error, "theorem must be 1, 5, prop1 or arcs");
  }
  bool ok = true;
  if (o.validate) {
    const bool complete = sys.kind == SystemKind::loops && !o.incomplete;
    sys = validate(build_holonomy(sig), sys, o.k, complete, o.workers);
    ok = sys.validation.state != ValidationState::invalid;
  }
  if (!o.svg_path.empty()) write_text(o.svg_path, export_svg(sys));
  json cfg = {{"surface", format_surface(sig)}, {"theorem", o.theorem}, {"t", o.t},   {"validate", o.validate},
              {"k", o.k},                        {"complete", !o.incomplete}, {"svg", o.svg_path}};
  return {dump_report(envelope("construct", cfg, system_to_json(sys), ok)), ok};
}

Outcome do_verify(const Options& o) {
  CurveSystem sys = load_system(o.system_path);
  const HolonomyRep rep = build_holonomy(sys.surface);
  sys = validate(rep, sys, o.k, !o.incomplete, o.workers);
  const bool ok = sys.validation.state != ValidationState::invalid;
  json result = system_to_json(sys);
  if (o.witnesses) {
    const std::size_t n = sys.size();
    std::vector<json> cells(n * (n + 1) / 2);
    std::vector<std::pair<std::size_t, std::size_t>> idx;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) idx.emplace_back(i, j);
    parallel_for(
        idx.size(),
        [&](std::size_t p) {
          const auto [i, j] = idx[p];
          const IntersectionResult r = i == j ? self_intersection(rep, sys.members[i])
                                              : intersection_number(rep, sys.members[i], sys.members[j]);
          json cell = r;
          cell["i"] = i;
          cell["j"] = j;
          cells[p] = cell;
        },
        o.workers);
    result["intersections"] = cells;
  }
  json cfg = {{"system", o.system_path}, {"k", o.k}, {"complete", !o.incomplete}, {"witnesses", o.witnesses}};
  return {dump_report(envelope("verify", cfg, result, ok)), ok};
}

Outcome do_search(const Options& o) {
  const SurfaceSig sig = parse_surface(o.surface);
  SearchOptions so;
  if (o.kind == "loops") so.kind = SystemKind::loops;
  else if (o.kind == "arcs") so.kind = SystemKind::arcs;
  else throw Error(ErrorKind::parse_error, "kind must be loops or arcs");
  so.k = o.k;
  so.complete = !o.incomplete;
  so.max_word_len = o.max_len;
  so.node_budget = o.node_budget;
  so.time_budget_s = o.time_budget;
  so.workers = o.workers;
  const SearchCertificate cert = search_max(build_holonomy(sig), so);
  json cfg = {{"surface", format_surface(sig)}, {"kind", o.kind},           {"k", o.k},
              {"complete", !o.incomplete},      {"max_len", o.max_len},     {"node_budget", o.node_budget},
              {"time_budget_s", round12(o.time_budget)}};
  return {dump_report(envelope("search", cfg, certificate_to_json(cert), cert.exhaustive)), cert.exhaustive};
}

Outcome do_bounds(const Options& o) {
  const auto [c_lo, c_hi] = parse_span(o.range, "c");
  const auto [n_lo, n_hi] = parse_span(o.range, "n");
  if (c_lo != 1 || n_lo != 0) throw Error(ErrorKind::parse_error, "ranges start at c=1 and n=0");
  if (c_hi < 1 || n_hi < 0) throw Error(ErrorKind::parse_error, "empty range");
  const ConsistencyReport rep = consistency_report(c_hi, n_hi);
  const bool ok = rep.violations.empty();
  if (o.format == "text") return {bounds_text(rep), ok};
  json result = rep;
  if (!o.surface.empty()) result["surface_bounds"] = bounds_for(parse_surface(o.surface));
  json cfg = {{"range", o.range}, {"surface", o.surface}};
  return {dump_report(envelope("bounds", cfg, result, ok)), ok};
}

Outcome do_lasso(const Options& o, bool t_lo_set, bool t_hi_set) {
  const LassoCase k = parse_lasso_case(o.lasso_case);
  GridSpec g = default_grid(k);
  if (t_lo_set) g.t_lo = o.t_lo;
  if (t_hi_set) g.t_hi = o.t_hi;
  g.c_lo = o.c_lo;
  g.c_hi = o.c_hi;
  g.samples = o.samples;
  g.seed = o.seed;
  const RegionReport rep = sweep(k, g, o.workers);
  bool ok = rep.violations.empty();
  if (o.format == "csv") return {lasso_csv(rep), ok};
  json result = rep;
  if (o.spiral) {
    const SpiralReport sp = spiral_fixed_point(o.spiral_t, o.spiral_c);
    result["spiral"] = sp;
    ok = ok && sp.witness && sp.witness->residual < 1e-9;
  }
  json cfg = {{"case", to_string(k)}, {"samples", o.samples}, {"seed", o.seed}, {"t_lo", round12(g.t_lo)},
              {"t_hi", round12(g.t_hi)}, {"c_lo", round12(g.c_lo)}, {"c_hi", round12(g.c_hi)}, {"spiral", o.spiral},
              {"spiral_t", round12(o.spiral_t)}, {"spiral_c", round12(o.spiral_c)}};
  return {dump_report(envelope("lasso", cfg, result, ok)), ok};
}

Outcome do_nibs(const Options& o) {
  CurveSystem sys = load_system(o.system_path);
  const HolonomyRep rep = build_holonomy(sys.surface);
  if (sys.validation.state == ValidationState::unchecked) sys = validate(rep, sys, 1, false, o.workers);
  const NibReport r = run_nib_checks(rep, sys, o.slit_samples, o.points, o.seed, o.workers);
  json result = r;
  bool ok = r.slit_violations == 0 && r.prop2_violations == 0 && r.lemma3.violations == 0;
  if (!o.corrupt.empty()) {
    // negative control: violations are expected here, so they do not fail the run
    const Word bad = rep.parse(o.corrupt);
    const std::vector<Nib> nibs = tips_of(rep, sys);
    int v = 0;
    for (std::size_t i = 0; i < nibs.size(); ++i) v += slit_embedding_check(rep, nibs[i], o.slit_samples, o.seed + i, &bad).violations;
    result["corrupted_control"] = {{"word", o.corrupt}, {"violations", v}};
  }
  json cfg = {{"system", o.system_path}, {"slit_samples", o.slit_samples}, {"points", o.points}, {"seed", o.seed},
              {"corrupt", o.corrupt}, {"epsilon", 1e-6}, {"min_separation", 1e-3}};
  return {dump_report(envelope("nibs", cfg, result, ok)), ok};
}

Outcome do_export_svg(const Options& o) {
  const CurveSystem sys = load_system(o.system_path);
  return {export_svg(sys), true};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Curve systems on punctured surfaces"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--workers", o.workers, "worker threads (default: CURVESYS_WORKERS or 1)")->check(CLI::NonNegativeNumber);
  app.add_option("--out", o.out_path, "write the report here instead of stdout");

  auto* construct = app.add_subcommand("construct", "build an explicit system");
  construct->add_option("--surface", o.surface, "S:g,n or N:c,n")->required();
  construct->add_option("--theorem", o.theorem, "1, 5, prop1 or arcs");
  construct->add_option("--t", o.t, "two-sided count for theorem 1");
  construct->add_flag("!--no-validate", o.validate, "skip certification");
  construct->add_option("--k", o.k);
  construct->add_flag("--incomplete", o.incomplete, "validate as a k-system rather than a complete one");
  construct->add_option("--svg", o.svg_path, "also write an SVG chord diagram");

  auto* verify = app.add_subcommand("verify", "certify a stored system");
  verify->add_option("--system", o.system_path)->required()->check(CLI::ExistingFile);
  verify->add_option("--k", o.k);
  verify->add_flag("--incomplete", o.incomplete);
  verify->add_flag("--witnesses", o.witnesses, "include per-pair intersection results");

  auto* search = app.add_subcommand("search", "exact maximum clique over a curve pool");
  search->add_option("--surface", o.surface)->required();
  search->add_option("--kind", o.kind, "loops or arcs");
  search->add_option("--k", o.k);
  search->add_flag("--incomplete", o.incomplete);
  search->add_option("--max-len", o.max_len)->check(CLI::PositiveNumber);
  search->add_option("--node-budget", o.node_budget);
  search->add_option("--time-budget", o.time_budget, "seconds, 0 = unlimited");

  auto* bounds = app.add_subcommand("bounds", "closed-form bounds and their consistency");
  bounds->add_option("--range", o.range, "c=1..C,n=0..N");
  bounds->add_option("--format", o.format)->check(CLI::IsMember({"json", "text"}));
  bounds->add_option("--surface", o.surface, "also list the bounds for one surface");

  auto* lasso = app.add_subcommand("lasso", "curvature ratio sweep");
  lasso->add_option("--case", o.lasso_case, "op or or");
  lasso->add_option("--samples", o.samples)->check(CLI::PositiveNumber);
  lasso->add_option("--seed", o.seed);
  auto* t_lo = lasso->add_option("--t-lo", o.t_lo);
  auto* t_hi = lasso->add_option("--t-hi", o.t_hi);
  lasso->add_option("--c-lo", o.c_lo);
  lasso->add_option("--c-hi", o.c_hi);
  lasso->add_option("--format", o.format)->check(CLI::IsMember({"json", "csv"}));
  lasso->add_flag("--spiral", o.spiral, "also check the reversing fixed point at --spiral-t, --spiral-c");
  lasso->add_option("--spiral-t", o.spiral_t);
  lasso->add_option("--spiral-c", o.spiral_c);

  auto* nibs = app.add_subcommand("nibs", "sampled nib checks for an arc system");
  nibs->add_option("--system", o.system_path)->required()->check(CLI::ExistingFile);
  nibs->add_option("--samples", o.slit_samples, "slit samples per nib")->check(CLI::NonNegativeNumber);
  nibs->add_option("--points", o.points, "thick-part points for preimage counts")->check(CLI::NonNegativeNumber);
  nibs->add_option("--seed", o.seed);
  nibs->add_option("--corrupt", o.corrupt, "aim slits at this word's axis as a negative control");

  auto* svg = app.add_subcommand("export-svg", "chord diagram of a stored system");
  svg->add_option("--system", o.system_path)->required()->check(CLI::ExistingFile);

  const std::vector<std::string> rev0(args.rbegin(), args.rend());
  try {
    std::vector<std::string> rev = rev0;
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return 2;
  }

  const int prev = default_workers();
  if (o.workers > 0) set_default_workers(o.workers);
  struct Restore {
    int w;
    ~Restore() { set_default_workers(w); }
  } restore{prev};

  Outcome res;
  try {
    if (*construct) res = do_construct(o);
    else if (*verify) res = do_verify(o);
    else if (*search) res = do_search(o);
    else if (*bounds) res = do_bounds(o);
    else if (*lasso) res = do_lasso(o, t_lo->count() > 0, t_hi->count() > 0);
    else if (*nibs) res = do_nibs(o);
    else res = do_export_svg(o);
  } catch (const Error& e) {
    err << to_string(e.kind()) << ": " << e.what() << '\n';
    if (usage_kind(e.kind())) return 2;
    out << dump_report({{"schema", "curvesys.error"},
                        {"schema_version", kSchemaVersion},
                        {"error", std::string(to_string(e.kind()))},
                        {"message", e.what()},
                        {"status", "error"}});
    return 1;
  }
  if (o.out_path.empty()) out << res.text;
  else write_text(o.out_path, res.text);
  return res.ok ? 0 : 1;
}

}  // namespace curvesys::cli
