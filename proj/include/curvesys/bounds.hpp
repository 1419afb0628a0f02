#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "curvesys/surface.hpp"
#include "json.hpp"

namespace curvesys {

std::int64_t binom2(std::int64_t n);

std::int64_t thm4_exact(int chi_abs);
/// Throws BadT unless 0 <= t <= c-1, or t == c with c odd.
std::int64_t thm1_lower(int c, int n, int t);
std::int64_t cor1_lower(int c, int n);
/// Binomial form; throws Precondition if the expanded polynomial disagrees.
std::int64_t thm5_lower(int c, int n);
std::int64_t thm5_polynomial(int c, int n);
std::int64_t thm2_upper(int c, int n);

/// Queries: prop1(g), thm6(chi_abs), lemma1(chi_abs), cor2(n), nonhyp(N:c,n), prop2(chi_abs).
std::int64_t misc_value(const std::string& query, const std::string& arg);

enum class BoundKind { exact, lower, upper };

/// `family` separates complete-system bounds from general 1-system bounds; they are never compared.
struct BoundEntry {
  std::string name;
  std::string family;  // "complete_loops", "loops", "arcs"
  BoundKind kind = BoundKind::exact;
  std::int64_t value = 0;
  std::optional<int> t;
};

/// Every bound that applies to the surface.
std::vector<BoundEntry> bounds_for(const SurfaceSig& sig);

/// Largest complete 1-system of loops the closed forms allow, if one applies.
std::optional<std::int64_t> complete_loop_upper(const SurfaceSig& sig);

struct ConsistencyRow {
  int c = 0, n = 0, chi = 0;
  std::vector<std::int64_t> thm1_by_t;  // index t
  std::int64_t cor1 = 0;
  std::optional<std::int64_t> thm2, thm5, gap;
};

struct ConsistencyReport {
  int c_max = 0, n_max = 0;
  std::vector<ConsistencyRow> rows;
  std::vector<std::string> violations;
  int checks = 0;
};

ConsistencyReport consistency_report(int c_max, int n_max);

void to_json(nlohmann::json& j, const BoundEntry& e);
void to_json(nlohmann::json& j, const ConsistencyReport& r);

}  // namespace curvesys
