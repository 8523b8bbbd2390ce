#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "eccbounds/constructions.hpp"
#include "eccbounds/rational.hpp"

namespace ecc {

// One evaluated bound. `value` is meaningful iff `applicable`; `extremal`
// lists family specs that achieve the bound exactly when the equality case is
// characterized. `exceptional` marks parameter points where the generic
// formula needed an adjustment.
struct BoundReport {
  std::string bound_id;
  int index = 0;  // which sigma; -1 for raw edge-count bounds
  std::string direction;  // "lower" or "upper"
  Rational value;
  bool applicable = true;
  std::string reason;
  bool exceptional = false;
  std::vector<FamilySpec> extremal;
};

// Closed forms for the kite sigma2 values; valid for any n >= d+1, d >= 2
// (not limited to graphs that fit in 64 vertices).
std::int64_t kite_sigma2(std::int64_t n, std::int64_t d);
std::int64_t kite_prime_sigma2(std::int64_t n, std::int64_t d);

// Maximum edge count of a connected n-vertex graph with diameter d
// (2 <= d <= n-1; throws outside that range).
std::int64_t ore_max_edges(int n, int d);

// Minimum edge count of a connected n-vertex graph with chromatic number k
// (1 <= k <= n; throws outside that range).
std::int64_t min_edges_chi(int n, int k);

// Radius/diameter sandwich: six reports (lower, upper) x (sigma0..sigma2).
std::vector<BoundReport> obs_sandwich(int n, std::int64_t m, int r, int d);

BoundReport sigma2_diam_upper_coarse(int n, int d);
BoundReport sigma2_diam_max(int n, int d);
BoundReport sigma01_diam_lower(int i, int n, int d);
BoundReport sigma2_nmd_lower(int n, std::int64_t m, int d);
BoundReport sigma2_diam_lower(int n, int d);

// Bounds parameterized by chromatic number k; pass clique_class to get the
// clique-number variant (same values, different id and equality class).
BoundReport chromatic_bounds(int i, int n, int k, bool upper, bool clique_class = false);
BoundReport sigma2_chromatic_lower(int n, int k, bool clique_class = false);

BoundReport matching_bounds(int i, int n, int k, bool upper);
BoundReport sigma2_matching_lower(int n, int k);

// Tree maximum restated as a report (value = tree_max_bound).
BoundReport tree_max_report(int i, int n, int d);

// Evaluates a bound id with named parameters (the CLI contract). Unknown ids
// and missing parameters throw; out-of-range parameters come back as
// applicable=false reports.
std::vector<BoundReport> bound_by_id(
    const std::string& id, const std::vector<std::pair<std::string, std::int64_t>>& params);

// Ids usable with bound_by_id, with their parameter lists.
std::vector<std::pair<std::string, std::string>> known_bounds();

}  // namespace ecc
