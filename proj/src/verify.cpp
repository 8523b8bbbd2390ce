#include "eccbounds/verify.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <chrono>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>

#include "eccbounds/bounds.hpp"
#include "eccbounds/canon.hpp"
#include "eccbounds/constructions.hpp"
#include "eccbounds/enumerate.hpp"
#include "eccbounds/graph6.hpp"
#include "eccbounds/invariants.hpp"
#include "eccbounds/metrics.hpp"

namespace ecc {

namespace {

constexpr std::size_t kViolationCap = 8;    // per slice
constexpr std::size_t kGlobalCap = 32;      // per run
constexpr std::size_t kAchieverCap = 128;   // per slice, canonical forms

enum class VId {
  ObsSandwich,
  LemmaTreeMax,
  LemmaDiamGtHalf,
  LemmaOreMaxEdges,
  ThmSigma2DiamUpperCoarse,
  ThmSigma2DiamMax,
  PropSigma01DiamLower,
  ThmSigma2NmdLower,
  CorSigma2DiamLower,
  ThmChrom01Lower,
  ThmClique01Lower,
  ThmChrom01Upper,
  ThmClique01Upper,
  ThmSigma2ChromaticLower,
  ThmSigma2CliqueLower,
  LemmaMinEdgesChi,
  LemmaMatchingDominating,
  PropMatching01Lower,
  ThmMatching01Upper,
  ThmSigma2MatchingLower,
};

struct IdInfo {
  VId vid;
  const char* name;
  bool trees;        // enumerate trees instead of all connected graphs
  bool attainment;   // every nonempty slice should contain an equality witness
  bool uniqueness;   // achiever sets are characterized
};

constexpr IdInfo kRegistry[] = {
    {VId::ObsSandwich, "obs_sandwich", false, false, false},
    {VId::LemmaTreeMax, "lemma_tree_max", true, true, true},
    {VId::LemmaDiamGtHalf, "lemma_diam_gt_half", false, false, false},
    {VId::LemmaOreMaxEdges, "lemma_ore_max_edges", false, true, false},
    {VId::ThmSigma2DiamUpperCoarse, "thm_sigma2_diam_upper_coarse", false, false, false},
    {VId::ThmSigma2DiamMax, "thm_sigma2_diam_max", false, true, true},
    {VId::PropSigma01DiamLower, "prop_sigma01_diam_lower", false, true, false},
    {VId::ThmSigma2NmdLower, "thm_sigma2_nmd_lower", false, true, false},
    {VId::CorSigma2DiamLower, "cor_sigma2_diam_lower", false, true, false},
    {VId::ThmChrom01Lower, "thm_chrom01_lower", false, true, true},
    {VId::ThmClique01Lower, "thm_clique01_lower", false, true, true},
    {VId::ThmChrom01Upper, "thm_chrom01_upper", false, true, false},
    {VId::ThmClique01Upper, "thm_clique01_upper", false, true, false},
    {VId::ThmSigma2ChromaticLower, "thm_sigma2_chromatic_lower", false, true, true},
    {VId::ThmSigma2CliqueLower, "thm_sigma2_clique_lower", false, true, true},
    {VId::LemmaMinEdgesChi, "lemma_min_edges_chi", false, true, false},
    {VId::LemmaMatchingDominating, "lemma_matching_dominating", false, false, false},
    {VId::PropMatching01Lower, "prop_matching01_lower", false, true, true},
    {VId::ThmMatching01Upper, "thm_matching01_upper", false, true, true},
    {VId::ThmSigma2MatchingLower, "thm_sigma2_matching_lower", false, true, true},
};

const IdInfo* find_id(const std::string& name) {
  for (const auto& info : kRegistry)
    if (name == info.name) return &info;
  return nullptr;
}

struct SliceKey {
  int n = 0;
  std::int64_t a = -1;  // d or k or m, depending on the bound
  std::int64_t b = -1;  // d when a is m
  int i = -1;           // sigma index for per-index bounds
  auto operator<=>(const SliceKey&) const = default;
};

std::string label_for(VId vid, const SliceKey& key) {
  std::string s = "n=" + std::to_string(key.n);
  switch (vid) {
    case VId::ThmSigma2NmdLower:
      s += ",m=" + std::to_string(key.a) + ",d=" + std::to_string(key.b);
      break;
    case VId::LemmaTreeMax:
    case VId::LemmaOreMaxEdges:
    case VId::ThmSigma2DiamUpperCoarse:
    case VId::ThmSigma2DiamMax:
    case VId::PropSigma01DiamLower:
    case VId::CorSigma2DiamLower:
      s += ",d=" + std::to_string(key.a);
      break;
    case VId::ObsSandwich:
    case VId::LemmaDiamGtHalf:
      break;
    default:
      s += ",k=" + std::to_string(key.a);
      break;
  }
  if (key.i >= 0) s += ",i=" + std::to_string(key.i);
  return s;
}

BoundReport wrap_edge_bound(const char* id, bool lower, bool ok, std::int64_t value,
                            const char* reason) {
  BoundReport r;
  r.bound_id = id;
  r.index = -1;
  r.direction = lower ? "lower" : "upper";
  if (ok)
    r.value = Rational(value);
  else {
    r.applicable = false;
    r.reason = reason;
  }
  return r;
}

BoundReport oracle_for(VId vid, const SliceKey& key) {
  int n = key.n;
  switch (vid) {
    case VId::LemmaTreeMax:
      return tree_max_report(key.i, n, static_cast<int>(key.a));
    case VId::LemmaOreMaxEdges: {
      bool ok = key.a >= 2 && key.a <= n - 1;
      return wrap_edge_bound("lemma_ore_max_edges", false, ok,
                             ok ? ore_max_edges(n, static_cast<int>(key.a)) : 0,
                             "need 2 <= d <= n-1");
    }
    case VId::ThmSigma2DiamUpperCoarse:
      return sigma2_diam_upper_coarse(n, static_cast<int>(key.a));
    case VId::ThmSigma2DiamMax:
      return sigma2_diam_max(n, static_cast<int>(key.a));
    case VId::PropSigma01DiamLower:
      return sigma01_diam_lower(key.i, n, static_cast<int>(key.a));
    case VId::ThmSigma2NmdLower:
      return sigma2_nmd_lower(n, key.a, static_cast<int>(key.b));
    case VId::CorSigma2DiamLower:
      return sigma2_diam_lower(n, static_cast<int>(key.a));
    case VId::ThmChrom01Lower:
      return chromatic_bounds(key.i, n, static_cast<int>(key.a), false, false);
    case VId::ThmClique01Lower:
      return chromatic_bounds(key.i, n, static_cast<int>(key.a), false, true);
    case VId::ThmChrom01Upper:
      return chromatic_bounds(key.i, n, static_cast<int>(key.a), true, false);
    case VId::ThmClique01Upper:
      return chromatic_bounds(key.i, n, static_cast<int>(key.a), true, true);
    case VId::ThmSigma2ChromaticLower:
      return sigma2_chromatic_lower(n, static_cast<int>(key.a), false);
    case VId::ThmSigma2CliqueLower:
      return sigma2_chromatic_lower(n, static_cast<int>(key.a), true);
    case VId::LemmaMinEdgesChi: {
      bool ok = key.a >= 1 && key.a <= n;
      return wrap_edge_bound("lemma_min_edges_chi", true, ok,
                             ok ? min_edges_chi(n, static_cast<int>(key.a)) : 0,
                             "need 1 <= k <= n");
    }
    case VId::PropMatching01Lower:
      return matching_bounds(key.i, n, static_cast<int>(key.a), false);
    case VId::ThmMatching01Upper:
      return matching_bounds(key.i, n, static_cast<int>(key.a), true);
    case VId::ThmSigma2MatchingLower:
      return sigma2_matching_lower(n, static_cast<int>(key.a));
    default:
      throw std::logic_error("oracle_for: id has no single-value oracle");
  }
}

// Characterized equality classes, as canonical graph6 sets.
std::optional<std::set<std::string>> expected_achievers(VId vid, const SliceKey& key) {
  auto canon_of = [](const Graph& g) { return canonical_graph6(g); };
  std::set<std::string> out;
  int n = key.n;
  switch (vid) {
    case VId::LemmaTreeMax: {
      int d = static_cast<int>(key.a);
      if (d == 1)
        out.insert(canon_of(path_graph(2)));
      else
        for (int a = 1; a <= n - d; ++a) out.insert(canon_of(double_broom(n, d, a).graph));
      return out;
    }
    case VId::ThmMatching01Upper: {
      int k = static_cast<int>(key.a);
      if (k == n / 2)
        out.insert(canon_of(path_graph(n)));
      else
        for (int a = 1; a <= n - 2 * k; ++a) out.insert(canon_of(double_broom(n, 2 * k, a).graph));
      return out;
    }
    case VId::ThmChrom01Lower:
    case VId::ThmClique01Lower: {
      int k = static_cast<int>(key.a);
      out.insert(canon_of(join_family(n, k - 1, k - 1).graph));
      return out;
    }
    case VId::PropMatching01Lower:
      out.insert(canon_of(join_family(n, static_cast<int>(key.a), static_cast<int>(key.a)).graph));
      return out;
    case VId::ThmSigma2DiamMax:
    case VId::ThmSigma2ChromaticLower:
    case VId::ThmSigma2CliqueLower:
    case VId::ThmSigma2MatchingLower: {
      for (const auto& spec : oracle_for(vid, key).extremal)
        out.insert(canon_of(make_family(spec).graph));
      return out;
    }
    default:
      return std::nullopt;
  }
}

struct SliceStat {
  bool inapplicable = false;
  bool lower = false;
  Rational bound;
  std::uint64_t checked = 0;
  std::uint64_t violation_count = 0;
  std::vector<Violation> violations;
  std::uint64_t sharp = 0;
  std::set<std::string> achievers;
  bool achievers_overflow = false;
  std::set<std::string> tree_achievers;  // used by thm_matching01_upper only
  bool tree_overflow = false;
};

void add_achiever(std::set<std::string>& set, bool& overflow, const std::string& canon) {
  if (overflow) return;
  set.insert(canon);
  if (set.size() > kAchieverCap) {
    overflow = true;
    set.clear();
  }
}

// Everything inspect() needs about one graph, with the expensive encodings
// computed lazily.
struct Profile {
  const Graph* g = nullptr;
  int n = 0, r = 0, d = 0;
  std::int64_t m = 0, ecc_sum = 0, s1 = 0, s2 = 0;
  std::array<int, Graph::max_vertices> ecc{};
  std::optional<std::string> plain6, canon6_;

  const std::string& graph6() {
    if (!plain6) plain6 = graph6_encode(*g);
    return *plain6;
  }
  const std::string& canon6() {
    if (!canon6_) canon6_ = canonical_graph6(*g);
    return *canon6_;
  }
  Rational sigma(int i) const {
    if (i == 0) return Rational(ecc_sum, n);
    return Rational(i == 1 ? s1 : s2);
  }
};

class RegistryAcc final : public SweepAccumulator {
 public:
  RegistryAcc(VId vid, bool iso_reduce) : vid_(vid), iso_(iso_reduce) {}

  std::unique_ptr<SweepAccumulator> fork() const override {
    return std::make_unique<RegistryAcc>(vid_, iso_);
  }

  void see(const Graph& g) override {
    if (iso_ && canonical_code(g) != identity_code(g)) return;
    Profile p;
    p.g = &g;
    p.n = g.n;
    ecc_raw(g.n, g.adj.data(), p.ecc.data());
    p.r = p.ecc[0];
    p.d = p.ecc[0];
    for (int v = 0; v < g.n; ++v) {
      p.r = std::min(p.r, p.ecc[v]);
      p.d = std::max(p.d, p.ecc[v]);
      p.ecc_sum += p.ecc[v];
      p.s1 += static_cast<std::int64_t>(p.ecc[v]) * p.ecc[v];
    }
    for (int u = 0; u < g.n; ++u) {
      std::uint64_t row = g.adj[u] & ~((2ULL << u) - 1);  // neighbors above u
      while (row) {
        int v = std::countr_zero(row);
        row &= row - 1;
        p.s2 += static_cast<std::int64_t>(p.ecc[u]) * p.ecc[v];
      }
    }
    p.m = g.edge_count();
    counted_ = false;
    inspect(p);
    if (counted_) ++graphs_checked_;
  }

  void merge(SweepAccumulator& other_base) override {
    auto& other = static_cast<RegistryAcc&>(other_base);
    graphs_checked_ += other.graphs_checked_;
    for (auto& [key, theirs] : other.slices_) {
      auto [it, fresh] = slices_.try_emplace(key, std::move(theirs));
      if (fresh) continue;
      SliceStat& mine = it->second;
      mine.checked += theirs.checked;
      mine.violation_count += theirs.violation_count;
      for (auto& v : theirs.violations)
        if (mine.violations.size() < kViolationCap) mine.violations.push_back(std::move(v));
      mine.sharp += theirs.sharp;
      if (theirs.achievers_overflow) mine.achievers_overflow = true;
      if (!mine.achievers_overflow)
        for (const auto& a : theirs.achievers) add_achiever(mine.achievers, mine.achievers_overflow, a);
      if (theirs.tree_overflow) mine.tree_overflow = true;
      if (!mine.tree_overflow)
        for (const auto& a : theirs.tree_achievers)
          add_achiever(mine.tree_achievers, mine.tree_overflow, a);
    }
  }

  VerificationRun finalize(const IdInfo& info, int n_min, int n_max) const {
    VerificationRun run;
    run.bound_id = info.name;
    run.n_min = n_min;
    run.n_max = n_max;
    run.graphs_checked = graphs_checked_;
    for (const auto& [key, stat] : slices_) {
      if (stat.inapplicable) continue;
      run.violation_count += stat.violation_count;
      for (const auto& v : stat.violations)
        if (run.violations.size() < kGlobalCap) run.violations.push_back(v);
      run.sharp_count += stat.sharp;
      for (const auto& a : stat.achievers)
        if (run.sharp_witnesses.size() < kGlobalCap) run.sharp_witnesses.push_back(a);
      // No tree of diameter 1 exists beyond n = 2, so the corollary's
      // tree-count bound cannot be met at d = 1; that slice is exempt.
      bool cor_d1 = vid_ == VId::CorSigma2DiamLower && key.a == 1 && key.n >= 4;
      if (info.attainment && stat.checked > 0 && !cor_d1) {
        run.attainment_checked = true;
        if (stat.sharp == 0) {
          run.attained_ok = false;
          run.unattained.push_back(label_for(vid_, key));
        }
      }
      if (info.uniqueness && stat.checked > 0) {
        auto expected = expected_achievers(vid_, key);
        if (!expected) continue;
        run.uniqueness_checked = true;
        bool tree_scope = vid_ == VId::ThmMatching01Upper && key.a < key.n / 2;
        const auto& got = tree_scope ? stat.tree_achievers : stat.achievers;
        bool overflow = tree_scope ? stat.tree_overflow : stat.achievers_overflow;
        if (overflow) {
          run.uniqueness_ok = false;
          run.uniqueness_mismatches.push_back(label_for(vid_, key) + ": achiever set overflow");
        } else if (got != *expected) {
          run.uniqueness_ok = false;
          std::string msg = label_for(vid_, key) + ": achievers {";
          for (const auto& a : got) msg += a + " ";
          msg += "} expected {";
          for (const auto& a : *expected) msg += a + " ";
          msg += "}";
          run.uniqueness_mismatches.push_back(std::move(msg));
        }
      }
    }
    return run;
  }

 private:
  void record(Profile& p, const SliceKey& key, const Rational& observed) {
    auto [it, fresh] = slices_.try_emplace(key);
    SliceStat& s = it->second;
    if (fresh) {
      BoundReport rep = oracle_for(vid_, key);
      s.inapplicable = !rep.applicable;
      if (rep.applicable) {
        s.bound = rep.value;
        s.lower = rep.direction == "lower";
      }
    }
    if (s.inapplicable) return;
    ++s.checked;
    counted_ = true;
    if (s.lower ? observed < s.bound : observed > s.bound) {
      ++s.violation_count;
      if (s.violations.size() < kViolationCap)
        s.violations.push_back(
            {label_for(vid_, key), p.graph6(), observed.to_string(), s.bound.to_string()});
    } else if (observed == s.bound) {
      ++s.sharp;
      add_achiever(s.achievers, s.achievers_overflow, p.canon6());
      if (vid_ == VId::ThmMatching01Upper && p.m == p.n - 1)
        add_achiever(s.tree_achievers, s.tree_overflow, p.canon6());
    }
  }

  // For the observation/lemma checks that have no single oracle value.
  void record_check(Profile& p, const SliceKey& key, bool violated, bool sharp,
                    const std::string& observed, const std::string& bound) {
    SliceStat& s = slices_[key];
    ++s.checked;
    counted_ = true;
    if (violated) {
      ++s.violation_count;
      if (s.violations.size() < kViolationCap)
        s.violations.push_back({label_for(vid_, key), p.graph6(), observed, bound});
    } else if (sharp) {
      ++s.sharp;
      add_achiever(s.achievers, s.achievers_overflow, p.canon6());
    }
  }

  void inspect(Profile& p) {
    const std::int64_t n = p.n, r = p.r, d = p.d;
    switch (vid_) {
      case VId::ObsSandwich: {
        bool bad = p.ecc_sum < r * n || p.ecc_sum > d * n || p.s1 < n * r * r ||
                   p.s1 > n * d * d || p.s2 < p.m * r * r || p.s2 > p.m * d * d;
        record_check(p, {p.n}, bad, r == d,
                     "sigma0=" + Rational(p.ecc_sum, p.n).to_string() +
                         ",sigma1=" + std::to_string(p.s1) + ",sigma2=" + std::to_string(p.s2),
                     "r=" + std::to_string(r) + ",d=" + std::to_string(d) +
                         ",m=" + std::to_string(p.m));
        break;
      }
      case VId::LemmaDiamGtHalf: {
        if (2 * d <= n) break;
        bool bad = p.ecc_sum >= d * n || p.s1 >= n * d * d;
        record_check(p, {p.n}, bad, false,
                     "sigma0=" + Rational(p.ecc_sum, p.n).to_string() +
                         ",sigma1=" + std::to_string(p.s1),
                     "sigma0<d and sigma1<n*d^2 for d>n/2");
        break;
      }
      case VId::LemmaTreeMax:
        for (int i = 0; i <= 2; ++i) record(p, {p.n, d, -1, i}, p.sigma(i));
        break;
      case VId::LemmaOreMaxEdges:
        if (d >= 2) record(p, {p.n, d}, Rational(p.m));
        break;
      case VId::ThmSigma2DiamUpperCoarse:
        if (d >= 2) record(p, {p.n, d}, Rational(p.s2));
        break;
      case VId::ThmSigma2DiamMax:
        if (d >= 3) record(p, {p.n, d}, Rational(p.s2));
        break;
      case VId::PropSigma01DiamLower:
        for (int i = 0; i <= 1; ++i) record(p, {p.n, d, -1, i}, p.sigma(i));
        break;
      case VId::ThmSigma2NmdLower:
        record(p, {p.n, p.m, d}, Rational(p.s2));
        break;
      case VId::CorSigma2DiamLower:
        record(p, {p.n, d}, Rational(p.s2));
        break;
      case VId::ThmChrom01Lower:
      case VId::ThmChrom01Upper: {
        int k = chromatic_number(*p.g);
        for (int i = 0; i <= 1; ++i) record(p, {p.n, k, -1, i}, p.sigma(i));
        break;
      }
      case VId::ThmClique01Lower:
      case VId::ThmClique01Upper: {
        int k = clique_number(*p.g);
        for (int i = 0; i <= 1; ++i) record(p, {p.n, k, -1, i}, p.sigma(i));
        break;
      }
      case VId::ThmSigma2ChromaticLower:
        record(p, {p.n, chromatic_number(*p.g)}, Rational(p.s2));
        break;
      case VId::ThmSigma2CliqueLower:
        record(p, {p.n, clique_number(*p.g)}, Rational(p.s2));
        break;
      case VId::LemmaMinEdgesChi:
        record(p, {p.n, chromatic_number(*p.g)}, Rational(p.m));
        break;
      case VId::LemmaMatchingDominating: {
        int k = matching_number(*p.g);
        if (k < 2 || k >= n / 2) break;
        record_check(p, {p.n, k}, dominating_count(*p.g) > k, false,
                     "dominating=" + std::to_string(dominating_count(*p.g)),
                     "dominating <= matching number");
        break;
      }
      case VId::PropMatching01Lower: {
        int k = matching_number(*p.g);
        for (int i = 0; i <= 1; ++i) record(p, {p.n, k, -1, i}, p.sigma(i));
        break;
      }
      case VId::ThmMatching01Upper: {
        int k = matching_number(*p.g);
        for (int i = 0; i <= 1; ++i) record(p, {p.n, k, -1, i}, p.sigma(i));
        break;
      }
      case VId::ThmSigma2MatchingLower:
        record(p, {p.n, matching_number(*p.g)}, Rational(p.s2));
        break;
    }
  }

  VId vid_;
  bool iso_;
  bool counted_ = false;
  std::uint64_t graphs_checked_ = 0;
  std::map<SliceKey, SliceStat> slices_;
};

}  // namespace

VerificationRun verify_bound(const std::string& bound_id, int n_max, VerifyOptions opts) {
  const IdInfo* info = find_id(bound_id);
  if (!info) throw std::invalid_argument("unknown verification id '" + bound_id + "'");
  int n_min = opts.n_min.value_or(info->vid == VId::ObsSandwich ? 1 : 2);
  n_min = std::max(n_min, 1);
  if (n_max < n_min)
    throw std::invalid_argument("verify_bound: n_max below n_min");
  // reject over-budget requests before sweeping, not when the loop gets there
  int budget = info->trees ? kEnumTreeBudget : kEnumGraphBudget;
  if (n_max > budget)
    throw std::invalid_argument("verify_bound: n_max exceeds the enumeration budget");
  auto t0 = std::chrono::steady_clock::now();
  RegistryAcc acc(info->vid, opts.iso_reduce);
  for (int n = n_min; n <= n_max; ++n) {
    if (info->trees)
      sweep_trees(n, acc, opts.jobs);
    else
      sweep_connected(n, acc, opts.jobs);
  }
  VerificationRun run = acc.finalize(*info, n_min, n_max);
  run.wall_time_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return run;
}

std::vector<std::string> known_verifications() {
  std::vector<std::string> out;
  for (const auto& info : kRegistry) out.push_back(info.name);
  return out;
}

}  // namespace ecc
