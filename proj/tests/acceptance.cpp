// One line per acceptance criterion; exit status is the number of failures.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "cli_app.hpp"
#include "curvesys/bounds.hpp"
#include "curvesys/chord_oracle.hpp"
#include "curvesys/intersection.hpp"
#include "curvesys/lasso.hpp"
#include "curvesys/nib.hpp"
#include "curvesys/system.hpp"

using namespace curvesys;

namespace {

using Clock = std::chrono::steady_clock;

struct Verdict {
  bool pass = true;
  std::string detail;
  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

long long choose2(long long n) { return n < 2 ? 0 : n * (n - 1) / 2; }

std::string fmt(double x) {
  char b[32];
  std::snprintf(b, sizeof b, "%.6g", x);
  return b;
}

// ---- 1
Verdict arc_polygons() {
  Verdict v;
  std::ostringstream info;
  for (auto [s, want] : {std::pair{"S:0,3", 4}, {"N:1,2", 4}, {"N:1,3", 12}, {"S:0,4", 12}}) {
    const auto t0 = Clock::now();
    const SurfaceSig sig = parse_surface(s);
    const int x = abs_euler_char(sig);
    // A0 sides plus the diagonals of a (2x+2)-gon
    const long long formula = (x + 1) + (2LL * x + 2) * (2LL * x - 1) / 2;
    CurveSystem sys;
    try {
      sys = validate(build_holonomy(sig), construct_arc_polygon(sig), 1, false);
    } catch (const Error& e) {
      v.fail(std::string(s) + ": " + e.what());
      continue;
    }
    const double dt = seconds_since(t0);
    if (static_cast<long long>(sys.size()) != want || formula != want) v.fail(std::string(s) + " size " + std::to_string(sys.size()));
    if (sys.validation.state == ValidationState::invalid) v.fail(std::string(s) + " invalid: " + sys.validation.reason);
    if (!sys.pairwise || sys.pairwise->maxCoeff() > 1) v.fail(std::string(s) + " pairwise count above 1");
    if (dt > 30) v.fail(std::string(s) + " took " + fmt(dt) + " s");
    info << s << "=" << sys.size() << " ";
  }
  if (v.pass) v.detail = info.str() + "arcs, all pairs certified <= 1";
  return v;
}

// ---- 2
Verdict thm1_family() {
  Verdict v;
  const auto t0 = Clock::now();
  int sized = 0, certified = 0;
  for (int c = 1; c <= 6; ++c)
    for (int n = 0; n <= 4; ++n) {
      if (2 - c - n >= 0) continue;
      for (int t = 0; t <= c - 1; ++t) {
        const long long closed = choose2(c - 1 + n) + (c - 1 - t) / 2 + t + 1;
        // the two parity forms of the same count
        const long long s = static_cast<long long>(c + n) * (c + n) - 3 * n - 2 * c + t;
        const long long poly = (c - t) % 2 == 0 ? (s + 2) / 2 : (s + 3) / 2;
        const std::size_t got = construct_thm1(c, n, t).size();
        if (closed != poly || static_cast<long long>(got) != closed)
          v.fail("N:" + std::to_string(c) + "," + std::to_string(n) + " t=" + std::to_string(t) + " size " + std::to_string(got) +
                 " vs " + std::to_string(closed));
        ++sized;
      }
      if (c <= 6) {
        const long long cor1 = choose2(c - 1 + n) + c;
        if (thm1_lower(c, n, c - 1) != cor1) v.fail("cor1 mismatch");
      }
    }
  for (auto [c, n] : {std::pair{1, 3}, {2, 2}, {3, 1}, {2, 1}}) {
    const HolonomyRep rep = build_holonomy(SurfaceSig::non_orientable(c, n));
    for (int t = 0; t <= c - 1; ++t) {
      CurveSystem sys;
      try {
        sys = validate(rep, construct_thm1(c, n, t), 1, true);
      } catch (const Error& e) {
        v.fail(e.what());
        continue;
      }
      const std::string tag = "N:" + std::to_string(c) + "," + std::to_string(n) + " t=" + std::to_string(t);
      if (sys.validation.state != ValidationState::valid_complete_k_system) v.fail(tag + " " + sys.validation.reason);
      for (std::size_t i = 0; i < sys.size(); ++i)
        for (std::size_t j = i + 1; j < sys.size(); ++j)
          if ((*sys.pairwise)(static_cast<int>(i), static_cast<int>(j)) != 1) v.fail(tag + " pair not 1");
      int two = 0;
      for (const auto& m : sys.members) two += sidedness(rep, m) == Sidedness::two_sided;
      if (two != t) v.fail(tag + " has " + std::to_string(two) + " two-sided");
      ++certified;
    }
  }
  const double dt = seconds_since(t0);
  if (dt > 300) v.fail("took " + fmt(dt) + " s");
  if (v.pass) v.detail = std::to_string(sized) + " (c,n,t) sizes exact, " + std::to_string(certified) + " systems certified complete, " + fmt(dt) + " s";
  return v;
}

// ---- 3
Verdict cor2_search() {
  Verdict v;
  const auto t0 = Clock::now();
  std::ostringstream info;
  for (int n : {2, 3}) {
    SearchOptions o;
    o.max_word_len = 8;
    const SearchCertificate cert = search_max(build_holonomy(SurfaceSig::non_orientable(1, n)), o);
    const long long cor2 = (static_cast<long long>(n) * n - n) / 2 + 1;
    if (!cert.exhaustive) v.fail("N:1," + std::to_string(n) + " not exhaustive");
    if (static_cast<long long>(cert.best.size()) != cor2 || thm2_upper(1, n) != cor2)
      v.fail("N:1," + std::to_string(n) + " best " + std::to_string(cert.best.size()));
    if (cert.best.validation.state != ValidationState::valid_complete_k_system) v.fail("witness not certified");
    info << "N:1," << n << " best=" << cert.best.size() << " pool=" << cert.pool_size << " ";
  }
  const double dt = seconds_since(t0);
  if (dt > 600) v.fail("took " + fmt(dt) + " s");
  if (v.pass) v.detail = info.str() + "exhaustive, " + fmt(dt) + " s";
  return v;
}

// ---- 4
Verdict prop1() {
  Verdict v;
  const auto t0 = Clock::now();
  for (int g : {1, 2}) {
    const CurveSystem sys = validate(build_holonomy(SurfaceSig::orientable_surface(g, 1)), construct_prop1(g, 1), 1, true);
    if (static_cast<int>(sys.size()) != 2 * g + 1) v.fail("S:" + std::to_string(g) + ",1 size " + std::to_string(sys.size()));
    if (sys.validation.state != ValidationState::valid_complete_k_system) v.fail("S:" + std::to_string(g) + ",1 not certified");
  }
  SearchOptions o;
  o.max_word_len = 6;
  const SearchCertificate cert = search_max(build_holonomy(SurfaceSig::orientable_surface(1, 1)), o);
  if (!cert.exhaustive) v.fail("S:1,1 search not exhaustive");
  if (cert.best.size() >= 4) v.fail("S:1,1 search found " + std::to_string(cert.best.size()));
  const double dt = seconds_since(t0);
  if (dt > 600) v.fail("took " + fmt(dt) + " s");
  if (v.pass) v.detail = "3 and 5 loops certified; S:1,1 search max " + std::to_string(cert.best.size()) + " over " + std::to_string(cert.pool_size) + " classes";
  return v;
}

// ---- 5
Verdict lasso() {
  Verdict v;
  const auto t0 = Clock::now();
  const RegionReport op = sweep(LassoCase::orientation_preserving, default_grid(LassoCase::orientation_preserving));
  const RegionReport orr = sweep(LassoCase::orientation_reversing, default_grid(LassoCase::orientation_reversing));
  if (op.samples != 10000 || orr.samples != 10000) v.fail("sample count");
  if (!op.violations.empty() || !(op.max_R < 1)) v.fail("preserving violations");
  if (!orr.violations.empty() || !(orr.min_R > 1)) v.fail("reversing violations");
  if (!(op.min_margin > 0) || !(orr.min_margin > 0)) v.fail("zero margin");
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> u(0, 1);
  double worst = 0, worst_y0 = 0;
  for (int i = 0; i < 1000; ++i) {
    const bool pres = i % 2 == 0;
    const double c = 0.5 + 1e-3 + 9.5 * u(rng);
    double t = pres ? -(2.01 + 48 * u(rng)) : 1e-3 + 50 * u(rng);
    if (pres && !region_op(t, c)) {
      --i;
      continue;
    }
    const auto [kl, kt] = curvature_pair(t, c);
    const double R = ratio_R(t, c);
    worst = std::max(worst, std::abs(kl / kt - R) / std::max(1.0, std::abs(R)));
    const auto [x, y] = honda_point(0, t, c);
    worst_y0 = std::max({worst_y0, std::abs(x - 1), std::abs(y - std::sqrt(2 * c - 1))});
  }
  if (worst > 1e-9) v.fail("curvature ratio off by " + fmt(worst));
  if (worst_y0 > 1e-12) v.fail("honda point off by " + fmt(worst_y0));
  const double dt = seconds_since(t0);
  if (dt > 10) v.fail("took " + fmt(dt) + " s");
  if (v.pass)
    v.detail = "max R(op)=" + fmt(op.max_R) + " min R(or)=" + fmt(orr.min_R) + " margins " + fmt(op.min_margin) + "/" +
               fmt(orr.min_margin) + ", curvature err " + fmt(worst);
  return v;
}

// ---- 6
Verdict spiral() {
  Verdict v;
  const auto t0 = Clock::now();
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0, 1);
  int found = 0, tries = 0;
  double worst = 0;
  while (found < 100 && tries < 100000) {
    ++tries;
    const double t = std::exp(std::log(1e-3) + u(rng) * std::log(5e4));
    const double c = 0.5 + 1e-3 + 9.5 * u(rng);
    const SpiralReport r = spiral_fixed_point(t, c);
    if (!r.witness) continue;
    const double a = r.witness->a;
    // phi(a) recomputed from the formula, independent of the Mobius class
    const double k = 2 * c * (1 + t);
    const double p1 = k / (a + t), p2 = k / (p1 + t);
    worst = std::max({worst, std::abs(a - p1) / a, std::abs(a - p2) / a, r.witness->residual / a});
    ++found;
  }
  if (found < 100) v.fail("only " + std::to_string(found) + " witnesses");
  if (worst > 1e-9) v.fail("residual " + fmt(worst));
  const double dt = seconds_since(t0);
  if (dt > 5) v.fail("took " + fmt(dt) + " s");
  if (v.pass) v.detail = std::to_string(found) + " witnesses in (1,2c), max relative residual " + fmt(worst);
  return v;
}

// ---- 7
Verdict nibs() {
  Verdict v;
  const auto t0 = Clock::now();
  std::ostringstream info;
  for (const char* s : {"S:0,3", "N:1,2"}) {
    const SurfaceSig sig = parse_surface(s);
    const HolonomyRep rep = build_holonomy(sig);
    const CurveSystem arcs = validate(rep, construct_arc_polygon(sig), 1, false);
    const NibReport r = run_nib_checks(rep, arcs, 200, 500, 2024);
    if (r.tips != 2 * arcs.size()) v.fail(std::string(s) + " tips " + std::to_string(r.tips));
    if (r.slit_violations != 0) v.fail(std::string(s) + " slit violations " + std::to_string(r.slit_violations));
    if (r.max_preimages > 4 || r.prop2_violations != 0) v.fail(std::string(s) + " preimages " + std::to_string(r.max_preimages));
    if (r.lemma3.violations != 0) v.fail(std::string(s) + " lemma3 violations");
    // the check has teeth: aiming at a non-simple axis must fail
    const Word bad = concat(power(Word{letter_of(0)}, 2), power(Word{letter_of(1)}, 2));
    const auto tips = tips_of(rep, arcs);
    if (slit_embedding_check(rep, tips[0], 50, 1, &bad).violations == 0) v.fail(std::string(s) + " control not detected");
    info << s << " tips=" << r.tips << " preimages " << r.min_preimages << ".." << r.max_preimages << "; ";
  }
  const double dt = seconds_since(t0);
  if (dt > 300) v.fail("took " + fmt(dt) + " s");
  if (v.pass) v.detail = info.str() + "0 slit violations";
  return v;
}

// ---- 8
Verdict bound_consistency() {
  Verdict v;
  const auto t0 = Clock::now();
  const ConsistencyReport r = consistency_report(6, 6);
  if (!r.violations.empty()) v.fail(r.violations.front());
  for (int c = 1; c <= 6; ++c)
    for (int n = 0; n <= 6; ++n) {
      if (2 - c - n >= 0) continue;
      long long best = 0;
      for (int t = 0; t <= c - 1; ++t) best = std::max<long long>(best, thm1_lower(c, n, t));
      if (best != cor1_lower(c, n)) v.fail("max_t thm1 != cor1 at " + std::to_string(c) + "," + std::to_string(n));
    }
  for (int c = 1; c <= 12; ++c)
    for (int n = 0; n <= 12; ++n) {
      if (2 - c - n >= 0) continue;
      const long long binom = choose2(c - 1 + n) + choose2(c - 1) + static_cast<long long>(c - 1) * (c + n - 2) + 1;
      const long long twice = 4LL * c * c + n * n + 4LL * c * n - 12LL * c - 5LL * n + 10;
      if (2 * binom != twice || thm5_lower(c, n) != binom || 2 * thm5_polynomial(c, n) != twice)
        v.fail("thm5 forms differ at " + std::to_string(c) + "," + std::to_string(n));
    }
  const double dt = seconds_since(t0);
  if (dt > 1) v.fail("took " + fmt(dt) + " s");
  if (v.pass) v.detail = std::to_string(r.checks) + " checks, 0 violations";
  return v;
}

// ---- 9
std::string cli_out(std::vector<std::string> args, int workers) {
  args.push_back("--workers");
  args.push_back(std::to_string(workers));
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return std::to_string(code) + "\n" + out.str();
}

Verdict engine_integrity() {
  Verdict v;
  int pairs = 0, oracle_pairs = 0;
  for (const char* s : {"S:1,1", "N:1,2", "S:0,3", "N:1,3", "N:2,1"}) {
    const HolonomyRep rep = build_holonomy(parse_surface(s));
    const std::vector<CurveClass> pool = curve_pool(rep, SystemKind::loops, 4);
    const Word g = {letter_of(0)};
    for (std::size_t i = 0; i < pool.size(); ++i)
      for (std::size_t j = i + 1; j < pool.size(); ++j) {
        const CurveClass &a = pool[i], &b = pool[j];
        const IntersectionResult ab = intersection_number(rep, a, b), ba = intersection_number(rep, b, a);
        if (!ab.certified || !ba.certified) v.fail(std::string(s) + " uncertified pair");
        if (ab.count != ba.count) v.fail(std::string(s) + " asymmetric " + rep.format(a.word) + "," + rep.format(b.word));
        const CurveClass conj = CurveClass::loop(concat(concat(g, a.word), inverse(g)));
        if (intersection_number(rep, conj, b).count != ab.count) v.fail(std::string(s) + " conjugacy");
        const int par = parity_pairing(rep, a.word, b.word);
        if (ab.count < par || (ab.count - par) % 2 != 0) v.fail(std::string(s) + " parity");
        if (a.word.size() + b.word.size() <= 5) {
          int oracle = -1;
          try {
            oracle = chord_oracle(rep.polygon_word, a.word, b.word);
          } catch (const Error&) {
          }
          if (oracle >= 0) {
            ++oracle_pairs;
            if (oracle != ab.count)
              v.fail(std::string(s) + " oracle " + std::to_string(oracle) + " vs " + std::to_string(ab.count) + " on " +
                     rep.format(a.word) + "," + rep.format(b.word));
          }
        }
        ++pairs;
      }
  }
  if (oracle_pairs < 20) v.fail("too few oracle comparisons");

  const auto dir = std::filesystem::temp_directory_path() / "curvesys_acceptance";
  std::filesystem::create_directories(dir);
  const std::string arcs = (dir / "n12_arcs.json").string();
  {
    std::ostringstream out, err;
    cli::run({"construct", "--surface", "N:1,2", "--theorem", "arcs", "--out", arcs}, out, err);
  }
  const std::vector<std::vector<std::string>> cmds = {
      {"construct", "--surface", "N:3,2", "--theorem", "1", "--t", "1"},
      {"construct", "--surface", "N:2,2", "--theorem", "5", "--incomplete"},
      {"verify", "--system", arcs, "--incomplete", "--witnesses"},
      {"search", "--surface", "N:1,3", "--max-len", "6"},
      {"bounds", "--range", "c=1..6,n=0..6"},
      {"lasso", "--case", "op", "--samples", "3000", "--seed", "5"},
      {"nibs", "--system", arcs, "--samples", "40", "--points", "60", "--seed", "3"},
  };
  int identical = 0;
  for (const auto& c : cmds) {
    const std::string w1 = cli_out(c, 1);
    if (w1.rfind("0\n", 0) != 0) v.fail(c[0] + " exited nonzero");
    if (cli_out(c, 4) != w1 || cli_out(c, 8) != w1) v.fail(c[0] + " differs across worker counts");
    else ++identical;
  }
  std::filesystem::remove_all(dir);
  if (v.pass)
    v.detail = std::to_string(pairs) + " pairs symmetric/conjugacy/parity ok, " + std::to_string(oracle_pairs) +
               " oracle matches, " + std::to_string(identical) + " reports identical at 1/4/8 workers";
  return v;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria = {
      {"1 arc polygon lower bound", arc_polygons},
      {"2 four-type complete systems", thm1_family},
      {"3 punctured projective plane search", cor2_search},
      {"4 orientable complete systems", prop1},
      {"5 lasso curvature sweeps", lasso},
      {"6 reversing fixed point", spiral},
      {"7 nib sampling", nibs},
      {"8 bound consistency", bound_consistency},
      {"9 engine integrity and determinism", engine_integrity},
  };
  int failed = 0;
  for (const auto& [name, fn] : criteria) {
    Verdict v;
    try {
      v = fn();
    } catch (const std::exception& e) {
      v.fail(std::string("threw: ") + e.what());
    }
    std::printf("[%s] criterion %s: %s\n", v.pass ? "PASS" : "FAIL", name.c_str(), v.detail.c_str());
    std::fflush(stdout);
    failed += !v.pass;
  }
  return failed;
}
