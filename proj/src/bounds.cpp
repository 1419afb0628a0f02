#include "curvesys/bounds.hpp"

#include <algorithm>

#include "curvesys/error.hpp"

namespace curvesys {

std::int64_t binom2(std::int64_t n) { return n < 2 ? 0 : n * (n - 1) / 2; }

std::int64_t thm4_exact(int chi_abs) {
  if (chi_abs < 1) throw Error(ErrorKind::precondition, "need |chi| >= 1");
  const std::int64_t x = chi_abs;
  return 2 * x * (x + 1);
}

std::int64_t thm1_lower(int c, int n, int t) {
  if (c < 1 || n < 0) throw Error(ErrorKind::precondition, "need c >= 1, n >= 0");
  if (t == c && c % 2 == 1) return c;
  if (t < 0 || t > c - 1) throw Error(ErrorKind::bad_t, "t must lie in [0, c-1], or equal c for odd c");
  return binom2(c - 1 + n) + (c - 1 - t) / 2 + t + 1;
}

std::int64_t cor1_lower(int c, int n) {
  if (c < 1 || n < 0) throw Error(ErrorKind::precondition, "need c >= 1, n >= 0");
  return binom2(c - 1 + n) + c;
}

std::int64_t thm5_polynomial(int c, int n) {
  // 2c^2 + n^2/2 + 2cn - 6c - 5n/2 + 5, doubled to stay integral
  const std::int64_t C = c, N = n;
  const std::int64_t twice = 4 * C * C + N * N + 4 * C * N - 12 * C - 5 * N + 10;
  if (twice % 2) throw Error(ErrorKind::precondition, "polynomial form is not integral");
  return twice / 2;
}

std::int64_t thm5_lower(int c, int n) {
  if (c < 1 || n < 0 || euler_char(SurfaceSig::non_orientable(c, n)) >= 0)
    throw Error(ErrorKind::precondition, "need chi(N_{c,n}) < 0");
  const std::int64_t C = c, N = n;
  const std::int64_t v = 1 + (C - 1) * (C + N - 2) + binom2(C - 1) + binom2(C - 1 + N);
  if (v != thm5_polynomial(c, n)) throw Error(ErrorKind::precondition, "binomial and polynomial forms disagree");
  return v;
}

std::int64_t thm2_upper(int c, int n) {
  const SurfaceSig sig = SurfaceSig::non_orientable(c, n);
  if (c < 1 || n < 0 || euler_char(sig) >= 0) throw Error(ErrorKind::precondition, "need chi(N_{c,n}) < 0");
  const std::int64_t N = n;
  if (c == 1) return (N * N - N) / 2 + 1;
  if (c == 2) return 2 * N * N + N + 2;
  const std::int64_t x = abs_euler_char(sig);
  return 2 * x * x + 2 * x + 1;
}

std::int64_t misc_value(const std::string& query, const std::string& arg) {
  auto integer = [&] {
    try {
      std::size_t used = 0;
      const int v = std::stoi(arg, &used);
      if (used != arg.size()) throw std::invalid_argument(arg);
      return v;
    } catch (const std::logic_error&) {
      throw Error(ErrorKind::unsupported_query, "query " + query + " needs an integer argument");
    }
  };
  if (query == "prop1") {
    const int g = integer();
    if (g < 1) throw Error(ErrorKind::unsupported_query, "prop1 needs g >= 1");
    return 2 * g + 1;
  }
  if (query == "thm6") {
    const std::int64_t x = integer();
    if (x < 1) throw Error(ErrorKind::unsupported_query, "thm6 needs |chi| >= 1");
    return x * (x + 1) / 2;
  }
  if (query == "lemma1") {
    const int x = integer();
    if (x < 1) throw Error(ErrorKind::unsupported_query, "lemma1 needs |chi| >= 1");
    return 2 * x;
  }
  if (query == "prop2") {
    const int x = integer();
    if (x < 1) throw Error(ErrorKind::unsupported_query, "prop2 needs |chi| >= 1");
    return 2 * (x + 1);
  }
  if (query == "cor2") {
    const int n = integer();
    if (n < 0) throw Error(ErrorKind::unsupported_query, "cor2 needs n >= 0");
    return binom2(n) + 1;
  }
  if (query == "nonhyp") {
    SurfaceSig sig;
    try {
      sig = parse_surface(arg);
    } catch (const Error&) {
      throw Error(ErrorKind::unsupported_query, "nonhyp needs a surface such as N:2,0");
    }
    if (sig == SurfaceSig::non_orientable(1, 0) || sig == SurfaceSig::non_orientable(1, 1)) return 1;
    if (sig == SurfaceSig::non_orientable(2, 0)) return 2;
    throw Error(ErrorKind::unsupported_query, "no tabulated value for " + format_surface(sig));
  }
  throw Error(ErrorKind::unsupported_query, "unknown query '" + query + "'");
}

std::optional<std::int64_t> complete_loop_upper(const SurfaceSig& sig) {
  if (sig.orientable) {
    if (sig.genus >= 1 && sig.boundaries <= 1) return 2 * sig.genus + 1;
    return std::nullopt;
  }
  if (euler_char(sig) < 0) return thm2_upper(sig.genus, sig.boundaries);
  if (sig.boundaries == 0 && sig.genus <= 2) return misc_value("nonhyp", format_surface(sig));
  if (sig == SurfaceSig::non_orientable(1, 1)) return 1;
  return std::nullopt;
}

std::vector<BoundEntry> bounds_for(const SurfaceSig& sig) {
  validate(sig);
  std::vector<BoundEntry> out;
  const int chi = euler_char(sig);
  const int x = abs_euler_char(sig);
  if (chi < 0 && sig.boundaries >= 1) out.push_back({"thm4", "arcs", BoundKind::exact, thm4_exact(x), std::nullopt});
  if (sig.orientable) {
    if (sig.genus >= 1 && sig.boundaries <= 1)
      out.push_back({"prop1", "complete_loops", BoundKind::exact, 2 * sig.genus + 1, std::nullopt});
    return out;
  }
  const int c = sig.genus, n = sig.boundaries;
  if (chi >= 0) {
    if (auto v = complete_loop_upper(sig)) out.push_back({"nonhyp", "complete_loops", BoundKind::exact, *v, std::nullopt});
    return out;
  }
  for (int t = 0; t <= c - 1; ++t)
    out.push_back({"thm1", "complete_loops", BoundKind::lower, thm1_lower(c, n, t), t});
  if (c % 2 == 1) out.push_back({"thm1", "complete_loops", BoundKind::lower, thm1_lower(c, n, c), c});
  out.push_back({"cor1", "complete_loops", BoundKind::lower, cor1_lower(c, n), std::nullopt});
  out.push_back({"thm2", "complete_loops", c == 1 ? BoundKind::exact : BoundKind::upper, thm2_upper(c, n), std::nullopt});
  out.push_back({"thm5", "loops", BoundKind::lower, thm5_lower(c, n), std::nullopt});
  return out;
}

ConsistencyReport consistency_report(int c_max, int n_max) {
  ConsistencyReport rep;
  rep.c_max = c_max;
  rep.n_max = n_max;
  auto where = [](int c, int n) { return "N:" + std::to_string(c) + "," + std::to_string(n) + ": "; };
  for (int c = 1; c <= c_max; ++c)
    for (int n = 0; n <= n_max; ++n) {
      ConsistencyRow row;
      row.c = c;
      row.n = n;
      row.chi = euler_char(SurfaceSig::non_orientable(c, n));
      for (int t = 0; t <= c - 1; ++t) row.thm1_by_t.push_back(thm1_lower(c, n, t));
      if (c % 2 == 1) row.thm1_by_t.push_back(thm1_lower(c, n, c));
      row.cor1 = cor1_lower(c, n);
      const std::int64_t best_t = *std::max_element(row.thm1_by_t.begin(), row.thm1_by_t.end());
      ++rep.checks;
      if (best_t != row.cor1 || thm1_lower(c, n, c - 1) != row.cor1)
        rep.violations.push_back(where(c, n) + "max over t of thm1 differs from cor1");
      if (row.chi < 0) {
        row.thm2 = thm2_upper(c, n);
        row.thm5 = thm5_lower(c, n);
        row.gap = *row.thm2 - row.cor1;
        ++rep.checks;
        if (row.cor1 > *row.thm2) rep.violations.push_back(where(c, n) + "cor1 exceeds thm2");
        for (std::size_t t = 0; t < row.thm1_by_t.size(); ++t) {
          ++rep.checks;
          if (row.thm1_by_t[t] > *row.thm2)
            rep.violations.push_back(where(c, n) + "thm1 at t=" + std::to_string(t) + " exceeds thm2");
        }
        if (c == 1) {
          ++rep.checks;
          if (row.cor1 != *row.thm2 || row.cor1 != misc_value("cor2", std::to_string(n)))
            rep.violations.push_back(where(c, n) + "cor2 equality fails");
        }
        if (n >= 1) {
          // nib area over surface area equals |A| / |chi| and matches the preimage bound at |A| = thm4
          const std::int64_t x = -row.chi;
          ++rep.checks;
          if (thm4_exact(static_cast<int>(x)) != x * misc_value("prop2", std::to_string(x)))
            rep.violations.push_back(where(c, n) + "area identity fails");
        }
      } else if (auto v = complete_loop_upper(SurfaceSig::non_orientable(c, n))) {
        row.thm2 = *v;
        ++rep.checks;
        if (row.cor1 > *v) rep.violations.push_back(where(c, n) + "cor1 exceeds the tabulated value");
      }
      rep.rows.push_back(std::move(row));
    }
  return rep;
}

namespace {
std::string kind_name(BoundKind k) {
  switch (k) {
    case BoundKind::exact: return "exact";
    case BoundKind::lower: return "lower";
    case BoundKind::upper: return "upper";
  }
  return "?";
}
}  // namespace

void to_json(nlohmann::json& j, const BoundEntry& e) {
  j = {{"name", e.name}, {"family", e.family}, {"kind", kind_name(e.kind)}, {"value", e.value}};
  if (e.t) j["t"] = *e.t;
}

void to_json(nlohmann::json& j, const ConsistencyReport& r) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : r.rows) {
    nlohmann::json o{{"c", row.c}, {"n", row.n}, {"chi", row.chi}, {"thm1_by_t", row.thm1_by_t}, {"cor1", row.cor1}};
    o["thm2"] = row.thm2 ? nlohmann::json(*row.thm2) : nlohmann::json(nullptr);
    o["thm5"] = row.thm5 ? nlohmann::json(*row.thm5) : nlohmann::json(nullptr);
    o["gap"] = row.gap ? nlohmann::json(*row.gap) : nlohmann::json(nullptr);
    rows.push_back(o);
  }
  j = {{"c_max", r.c_max}, {"n_max", r.n_max}, {"checks", r.checks}, {"violations", r.violations}, {"rows", rows}};
}

}  // namespace curvesys
