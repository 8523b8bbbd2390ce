#include "eccbounds/bounds.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "eccbounds/metrics.hpp"

namespace ecc {

namespace {

std::int64_t choose2(std::int64_t x) { return x < 2 ? 0 : x * (x - 1) / 2; }

std::int64_t g2(int d) { return path_contribution(2, d); }

FamilySpec famspec(std::string family,
                   std::initializer_list<std::pair<std::string, std::int64_t>> params) {
  FamilySpec s;
  s.family = std::move(family);
  s.params.assign(params);
  return s;
}

BoundReport not_applicable(std::string id, int index, std::string direction, std::string reason) {
  BoundReport r;
  r.bound_id = std::move(id);
  r.index = index;
  r.direction = std::move(direction);
  r.applicable = false;
  r.reason = std::move(reason);
  return r;
}

}  // namespace

std::int64_t kite_sigma2(std::int64_t n, std::int64_t d) {
  if (d < 2 || d > n - 1) throw std::invalid_argument("kite_sigma2: need 2 <= d <= n-1");
  std::int64_t c = n - d - 1;
  return g2(static_cast<int>(d)) + c * d * (d - 1) + choose2(n - d) * d * d;
}

std::int64_t kite_prime_sigma2(std::int64_t n, std::int64_t d) {
  if (d < 2 || d > n - 1) throw std::invalid_argument("kite_prime_sigma2: need 2 <= d <= n-1");
  std::int64_t c = n - d - 1;
  // the attachment to the third path vertex contributes (d-1)*max(2,d-2) per
  // clique vertex
  return g2(static_cast<int>(d)) + c * d * (d - 1) + choose2(n - d) * (d - 1) * (d - 1) +
         c * (d - 1) * std::max<std::int64_t>(2, d - 2);
}

std::int64_t ore_max_edges(int n, int d) {
  if (d < 2 || d > n - 1) throw std::invalid_argument("ore_max_edges: need 2 <= d <= n-1");
  return d + static_cast<std::int64_t>(n - d - 1) * (n - d + 4) / 2;
}

std::int64_t min_edges_chi(int n, int k) {
  if (k < 1 || k > n) throw std::invalid_argument("min_edges_chi: need 1 <= k <= n");
  return choose2(k) + n - k;
}

std::vector<BoundReport> obs_sandwich(int n, std::int64_t m, int r, int d) {
  std::vector<BoundReport> out;
  bool ok = n >= 1 && m >= 0 && r >= 0 && d >= r;
  for (int i = 0; i <= 2; ++i) {
    for (bool upper : {false, true}) {
      BoundReport rep;
      rep.bound_id = "obs_sandwich";
      rep.index = i;
      rep.direction = upper ? "upper" : "lower";
      if (!ok) {
        rep.applicable = false;
        rep.reason = "need n >= 1, m >= 0, 0 <= r <= d";
      } else {
        std::int64_t e = upper ? d : r;
        std::int64_t scale = i == 0 ? 1 : (i == 1 ? n : m);
        rep.value = Rational(scale * (i == 0 ? e : e * e));
      }
      out.push_back(std::move(rep));
    }
  }
  return out;
}

BoundReport sigma2_diam_upper_coarse(int n, int d) {
  const std::string id = "thm_sigma2_diam_upper_coarse";
  if (d < 2 || d > n - 1)
    return not_applicable(id, 2, "upper", "need 2 <= d <= n-1");
  BoundReport r;
  r.bound_id = id;
  r.index = 2;
  r.direction = "upper";
  std::int64_t dd = d;
  r.value = Rational(choose2(n - d) * dd * dd + 2 * (n - d - 1) * dd * dd + dd * dd * dd);
  return r;
}

BoundReport sigma2_diam_max(int n, int d) {
  const std::string id = "thm_sigma2_diam_max";
  if (d == 2)
    return not_applicable(id, 2, "upper",
                          "the d = 2 maximum is not covered by the kite formulas; "
                          "use the exhaustive scan");
  if (d < 3 || d > n - 1)
    return not_applicable(id, 2, "upper", "need 3 <= d <= n-1");
  BoundReport r;
  r.bound_id = id;
  r.index = 2;
  r.direction = "upper";
  std::int64_t b = kite_sigma2(n, d), bp = kite_prime_sigma2(n, d);
  r.value = Rational(std::max(b, bp));
  if (b >= bp) r.extremal.push_back(famspec("kite", {{"n", n}, {"d", d}}));
  if (bp >= b) r.extremal.push_back(famspec("kite_prime", {{"n", n}, {"d", d}}));
  return r;
}

BoundReport sigma01_diam_lower(int i, int n, int d) {
  const std::string id = "prop_sigma01_diam_lower";
  if (i != 0 && i != 1)
    return not_applicable(id, i, "lower", "index must be 0 or 1");
  if (d < 1 || d > n - 1)
    return not_applicable(id, i, "lower", "need 1 <= d <= n-1");
  BoundReport r;
  r.bound_id = id;
  r.index = i;
  r.direction = "lower";
  std::int64_t up = (d + 1) / 2, down = d / 2;
  if (i == 0)
    r.value = Rational(static_cast<std::int64_t>(n) * up + down * (down + 1), n);
  else
    r.value = Rational(path_contribution(1, d) + (n - d - 1) * up * up);
  r.extremal.push_back(famspec("diam_lower", {{"i", i}, {"n", n}, {"d", d}}));
  return r;
}

BoundReport sigma2_nmd_lower(int n, std::int64_t m, int d) {
  const std::string id = "thm_sigma2_nmd_lower";
  if (d < 1 || d > n - 1)
    return not_applicable(id, 2, "lower", "need 1 <= d <= n-1");
  std::int64_t cap = choose2(n - d) + 2LL * n - d - 2;
  cap = std::min(cap, choose2(n));
  if (m < n - 1 || m > cap)
    return not_applicable(id, 2, "lower",
                          "no connected diameter-" + std::to_string(d) + " graph on " +
                              std::to_string(n) + " vertices has " + std::to_string(m) + " edges");
  BoundReport r;
  r.bound_id = id;
  r.index = 2;
  r.direction = "lower";
  std::int64_t value;
  if (d % 2 == 1) {
    std::int64_t unit = static_cast<std::int64_t>(d + 1) * (d + 1) / 4;
    std::int64_t band_lo = 2LL * n - 2 - d, band_hi = choose2(n - d) + n - 1;
    std::int64_t k = m < band_lo ? band_lo - m : (m > band_hi ? m - band_hi : 0);
    value = g2(d) + (m - d) * unit + k * (d + 1) / 2;
  } else if (d >= 4) {
    auto mu = [&](std::int64_t j) { return n - 1 + choose2(j) + 2 * j; };
    std::int64_t k = 0;
    while (mu(k) < m) ++k;
    value = g2(d) + (m - d) * d * d / 4 + (n - 1 - d + k) * d / 2;
    if (d == 4 && m == n && n >= 7) {
      value += 3;
      r.exceptional = true;
      r.reason = "unicyclic diameter-4 case: generic band value raised by 3";
    }
  } else {  // d == 2
    auto nu = [&](std::int64_t j) { return choose2(j) + j * (n - j); };
    std::int64_t k = 1;
    while (k + 1 <= n - 2 && nu(k + 1) <= m) ++k;
    value = choose2(k) + 2 * k * (n - k) + 4 * (m - nu(k));
  }
  r.value = Rational(value);
  r.extremal.push_back(famspec("diam_lower", {{"i", 2}, {"n", n}, {"d", d}, {"m", m}}));
  return r;
}

BoundReport sigma2_diam_lower(int n, int d) {
  const std::string id = "cor_sigma2_diam_lower";
  if (d < 1 || d > n - 1)
    return not_applicable(id, 2, "lower", "need 1 <= d <= n-1");
  BoundReport r;
  r.bound_id = id;
  r.index = 2;
  r.direction = "lower";
  std::int64_t up = (d + 1) / 2;
  r.value = Rational(g2(d) + (n - 1 - d) * up * (up + 1));
  r.extremal.push_back(famspec("diam_lower", {{"i", 2}, {"n", n}, {"d", d}, {"m", n - 1}}));
  return r;
}

BoundReport chromatic_bounds(int i, int n, int k, bool upper, bool clique_class) {
  std::string id = clique_class ? "thm_clique01" : "thm_chrom01";
  id += upper ? "_upper" : "_lower";
  if (i != 0 && i != 1)
    return not_applicable(id, i, upper ? "upper" : "lower", "index must be 0 or 1");
  if (k < 2 || k > n - 1)
    return not_applicable(id, i, upper ? "upper" : "lower", "need 2 <= k <= n-1");
  BoundReport r;
  r.bound_id = id;
  r.index = i;
  r.direction = upper ? "upper" : "lower";
  if (upper) {
    r.value = tree_max_bound(i, n, n - k + 1);
    r.extremal.push_back(famspec("kite", {{"n", n}, {"d", n - k + 1}}));
  } else {
    r.value = i == 0 ? Rational(2LL * n - k + 1, n) : Rational(4LL * n - 3 * k + 3);
    r.extremal.push_back(famspec("join", {{"n", n}, {"k", k - 1}, {"s", k - 1}}));
  }
  return r;
}

BoundReport sigma2_chromatic_lower(int n, int k, bool clique_class) {
  const std::string id =
      clique_class ? "thm_sigma2_clique_lower" : "thm_sigma2_chromatic_lower";
  if (k < 2 || k > n - 1)
    return not_applicable(id, 2, "lower", "need 2 <= k <= n-1");
  BoundReport r;
  r.bound_id = id;
  r.index = 2;
  r.direction = "lower";
  std::int64_t N = n, K = k;
  std::vector<std::int64_t> best_s;
  std::int64_t value;
  if (k <= (n + 1) / 2) {
    value = 2 * N + 2 * K * K - 6 * K + 2;
    best_s = {1};
  } else if (k < (2 * n + 3) / 3) {
    value = (8 * K - 3) * N - 2 * N * N - 6 * K * K + 4 * K - 1;
    best_s = {4 * K - 2 * N - 2, 4 * K - 2 * N - 1};
  } else {
    value = 2 * (K - 1) * N - (3 * K * K - 5 * K + 2) / 2;
    best_s = {K - 1};
  }
  r.value = Rational(value);
  for (std::int64_t s : best_s)
    if (s >= 1 && s <= k - 1) r.extremal.push_back(famspec("join", {{"n", n}, {"k", k}, {"s", s}}));
  return r;
}

BoundReport matching_bounds(int i, int n, int k, bool upper) {
  const std::string id = upper ? "thm_matching01_upper" : "prop_matching01_lower";
  if (i != 0 && i != 1)
    return not_applicable(id, i, upper ? "upper" : "lower", "index must be 0 or 1");
  if (upper ? (k < 2 || 2 * k > n) : (k < 2 || k >= n / 2))
    return not_applicable(id, i, upper ? "upper" : "lower",
                          upper ? "need 2 <= k <= floor(n/2)" : "need 2 <= k < floor(n/2)");
  BoundReport r;
  r.bound_id = id;
  r.index = i;
  r.direction = upper ? "upper" : "lower";
  if (!upper) {
    r.value = i == 0 ? Rational(2LL * n - k, n) : Rational(4LL * n - 3 * k);
    r.extremal.push_back(famspec("join", {{"n", n}, {"k", k}, {"s", k}}));
  } else if (k == n / 2) {
    r.value = i == 0 ? Rational(path_contribution(0, n - 1), n)
                     : Rational(path_contribution(i, n - 1));
    r.extremal.push_back(famspec("path", {{"n", n}}));
  } else {
    r.value = tree_max_bound(i, n, 2 * k);
    r.extremal.push_back(famspec("double_broom", {{"n", n}, {"d", 2 * k}, {"a", 1}}));
  }
  return r;
}

BoundReport sigma2_matching_lower(int n, int k) {
  const std::string id = "thm_sigma2_matching_lower";
  if (k < 2 || 2 * k > n)
    return not_applicable(id, 2, "lower", "need 2 <= k <= n/2");
  BoundReport r;
  r.bound_id = id;
  r.index = 2;
  r.direction = "lower";
  if (n <= 6 && k == n / 2) {
    r.value = Rational(choose2(n));
    r.exceptional = true;
    r.reason = "near-perfect matching at n <= 6: only the complete graph attains the minimum";
    r.extremal.push_back(famspec("complete", {{"n", n}}));
  } else {
    r.value = Rational(2LL * n + 4 * k - 6);
    r.extremal.push_back(famspec("join", {{"n", n}, {"k", k}, {"s", 1}, {"pairs", 1}}));
  }
  return r;
}

BoundReport tree_max_report(int i, int n, int d) {
  const std::string id = "lemma_tree_max";
  if (i < 0 || i > 2) return not_applicable(id, i, "upper", "index must be 0, 1 or 2");
  if (!(d >= 2 && d <= n - 1) && !(d == 1 && n == 2))
    return not_applicable(id, i, "upper", "no tree has these parameters");
  BoundReport r;
  r.bound_id = id;
  r.index = i;
  r.direction = "upper";
  r.value = tree_max_bound(i, n, d);
  if (d >= 2)
    r.extremal.push_back(famspec("double_broom", {{"n", n}, {"d", d}, {"a", 1}}));
  else
    r.extremal.push_back(famspec("path", {{"n", 2}}));
  return r;
}

// ---------------------------------------------------------------------------
// CLI dispatch

namespace {

struct ParamBag {
  std::map<std::string, std::int64_t> map;
  std::int64_t need(const std::string& key) const {
    auto it = map.find(key);
    if (it == map.end()) throw std::invalid_argument("missing bound parameter '" + key + "'");
    return it->second;
  }
  int needi(const std::string& key) const { return static_cast<int>(need(key)); }
};

BoundReport edge_bound_report(const std::string& id, int n, std::int64_t value, bool upper,
                              std::vector<FamilySpec> extremal) {
  BoundReport r;
  r.bound_id = id;
  r.index = -1;
  r.direction = upper ? "upper" : "lower";
  r.value = Rational(value);
  r.extremal = std::move(extremal);
  (void)n;
  return r;
}

}  // namespace

std::vector<BoundReport> bound_by_id(
    const std::string& id, const std::vector<std::pair<std::string, std::int64_t>>& params) {
  ParamBag p;
  for (const auto& [k, v] : params) p.map[k] = v;

  if (id == "obs_sandwich")
    return obs_sandwich(p.needi("n"), p.need("m"), p.needi("r"), p.needi("d"));
  if (id == "lemma_tree_max")
    return {tree_max_report(p.needi("i"), p.needi("n"), p.needi("d"))};
  if (id == "lemma_ore_max_edges") {
    int n = p.needi("n"), d = p.needi("d");
    if (d < 2 || d > n - 1)
      return {not_applicable(id, -1, "upper", "need 2 <= d <= n-1")};
    return {edge_bound_report(id, n, ore_max_edges(n, d), true,
                              {famspec("ore", {{"n", n}, {"d", d}})})};
  }
  if (id == "lemma_min_edges_chi") {
    int n = p.needi("n"), k = p.needi("k");
    if (k < 1 || k > n)
      return {not_applicable(id, -1, "lower", "need 1 <= k <= n")};
    return {edge_bound_report(id, n, min_edges_chi(n, k), false, {})};
  }
  if (id == "thm_sigma2_diam_upper_coarse")
    return {sigma2_diam_upper_coarse(p.needi("n"), p.needi("d"))};
  if (id == "thm_sigma2_diam_max")
    return {sigma2_diam_max(p.needi("n"), p.needi("d"))};
  if (id == "prop_sigma01_diam_lower")
    return {sigma01_diam_lower(p.needi("i"), p.needi("n"), p.needi("d"))};
  if (id == "thm_sigma2_nmd_lower")
    return {sigma2_nmd_lower(p.needi("n"), p.need("m"), p.needi("d"))};
  if (id == "cor_sigma2_diam_lower")
    return {sigma2_diam_lower(p.needi("n"), p.needi("d"))};
  if (id == "thm_chrom01_lower" || id == "thm_chrom01_upper" || id == "thm_clique01_lower" ||
      id == "thm_clique01_upper") {
    bool upper = id.ends_with("_upper");
    bool clique = id.find("clique") != std::string::npos;
    return {chromatic_bounds(p.needi("i"), p.needi("n"), p.needi("k"), upper, clique)};
  }
  if (id == "thm_sigma2_chromatic_lower")
    return {sigma2_chromatic_lower(p.needi("n"), p.needi("k"), false)};
  if (id == "thm_sigma2_clique_lower")
    return {sigma2_chromatic_lower(p.needi("n"), p.needi("k"), true)};
  if (id == "prop_matching01_lower")
    return {matching_bounds(p.needi("i"), p.needi("n"), p.needi("k"), false)};
  if (id == "thm_matching01_upper")
    return {matching_bounds(p.needi("i"), p.needi("n"), p.needi("k"), true)};
  if (id == "thm_sigma2_matching_lower")
    return {sigma2_matching_lower(p.needi("n"), p.needi("k"))};
  throw std::invalid_argument("unknown bound id '" + id + "'");
}

std::vector<std::pair<std::string, std::string>> known_bounds() {
  return {
      {"obs_sandwich", "n,m,r,d"},
      {"lemma_tree_max", "i,n,d"},
      {"lemma_ore_max_edges", "n,d"},
      {"lemma_min_edges_chi", "n,k"},
      {"thm_sigma2_diam_upper_coarse", "n,d"},
      {"thm_sigma2_diam_max", "n,d"},
      {"prop_sigma01_diam_lower", "i,n,d"},
      {"thm_sigma2_nmd_lower", "n,m,d"},
      {"cor_sigma2_diam_lower", "n,d"},
      {"thm_chrom01_lower", "i,n,k"},
      {"thm_chrom01_upper", "i,n,k"},
      {"thm_clique01_lower", "i,n,k"},
      {"thm_clique01_upper", "i,n,k"},
      {"thm_sigma2_chromatic_lower", "n,k"},
      {"thm_sigma2_clique_lower", "n,k"},
      {"prop_matching01_lower", "i,n,k"},
      {"thm_matching01_upper", "i,n,k"},
      {"thm_sigma2_matching_lower", "n,k"},
  };
}

}  // namespace ecc
