// Acceptance gate. One PASS/FAIL line per shipped claim; exit code is the
// number of failing criteria. Grids and tolerances are pinned here on
// purpose -- loosening them needs a reason, not a rebuild.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <iostream>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "eccbounds/bounds.hpp"
#include "eccbounds/constructions.hpp"
#include "eccbounds/enumerate.hpp"
#include "eccbounds/graph.hpp"
#include "eccbounds/metrics.hpp"
#include "eccbounds/rational.hpp"
#include "eccbounds/scan.hpp"
#include "eccbounds/verify.hpp"
#include "support/naive.hpp"

using namespace ecc;

namespace {

int failures = 0;

void report(int id, const std::string& label, bool ok, const std::string& detail) {
  std::cout << (ok ? "PASS " : "FAIL ") << id << ": " << label;
  if (!detail.empty()) std::cout << " -- " << detail;
  std::cout << std::endl;
  if (!ok) ++failures;
}

std::string run_stats(const VerificationRun& r) {
  std::ostringstream os;
  os << r.bound_id << ": " << r.graphs_checked << " checked, " << r.violation_count
     << " violations, " << r.sharp_count << " sharp";
  if (r.uniqueness_checked) os << (r.uniqueness_ok ? ", uniqueness ok" : ", UNIQUENESS BAD");
  if (r.attainment_checked) os << (r.attained_ok ? ", attained" : ", UNATTAINED SLICES");
  return os.str();
}

bool clean(const VerificationRun& r, bool need_uniqueness, bool need_attainment) {
  if (r.violation_count != 0) return false;
  if (need_uniqueness && !(r.uniqueness_checked && r.uniqueness_ok)) return false;
  if (need_attainment && !(r.attainment_checked && r.attained_ok)) return false;
  return r.uniqueness_ok && r.attained_ok;  // also honor checks we did not insist on
}

// --- 1: bit-row index engine vs queue BFS ----------------------------------

struct OracleSweep final : SweepAccumulator {
  std::uint64_t seen = 0, bad = 0;
  std::unique_ptr<SweepAccumulator> fork() const override {
    return std::make_unique<OracleSweep>();
  }
  void see(const Graph& g) override {
    ++seen;
    IndexReport fast = indices(g);
    naive::Indices slow = naive::indices(g);
    if (!slow.connected || fast.ecc_sum != slow.ecc_sum || fast.sigma1 != slow.sigma1 ||
        fast.sigma2 != slow.sigma2 || fast.sigma0 != Rational(slow.ecc_sum, g.n))
      ++bad;
  }
  void merge(SweepAccumulator& chunk) override {
    auto& c = static_cast<OracleSweep&>(chunk);
    seen += c.seen;
    bad += c.bad;
  }
};

void criterion1() {
  OracleSweep acc;
  for (int n = 1; n <= 6; ++n) sweep_connected(n, acc);
  std::ostringstream os;
  os << acc.seen << " connected graphs, " << acc.bad << " mismatches";
  report(1, "index engine matches the per-vertex queue-BFS reference on every connected graph, n <= 6",
         acc.seen == 27476 && acc.bad == 0, os.str());
}

// --- 2: tree maxima with double brooms as the only achievers ----------------

void criterion2() {
  VerificationRun r = verify_bound("lemma_tree_max", 8);
  bool ok = clean(r, /*uniq=*/true, /*attain=*/true) && r.graphs_checked == 280392;
  report(2, "all labeled trees n <= 8 stay below f_i(n,d); equality exactly at the double brooms",
         ok, run_stats(r));
}

// --- 3: max sigma2 at fixed diameter = best of the two kites ----------------

void criterion3() {
  VerificationRun r = verify_bound("thm_sigma2_diam_max", 7);
  bool ok = clean(r, true, true);
  std::string why;
  for (int n = 4; n <= 40 && ok; ++n)
    for (int d = 3; d <= n - 1; ++d) {
      std::int64_t b = kite_sigma2(n, d), bp = kite_prime_sigma2(n, d);
      BoundReport rep = sigma2_diam_max(n, d);
      bool has_kite = false, has_prime = false;
      for (const FamilySpec& f : rep.extremal) {
        if (f.family == "kite") has_kite = true;
        if (f.family == "kite_prime") has_prime = true;
      }
      bool point_ok = rep.applicable && rep.value == Rational(std::max(b, bp));
      if (2 * d <= n + 2) point_ok = point_ok && rep.value == Rational(b) && has_kite;
      if (2 * d >= n + 3) point_ok = point_ok && rep.value == Rational(bp) && has_prime;
      if (!point_ok) {
        ok = false;
        why = "threshold rule broken at n=" + std::to_string(n) + ", d=" + std::to_string(d);
        break;
      }
    }
  report(3, "exhaustive max sigma2 at fixed diameter (n <= 7) equals the better kite; winner follows the 2d vs n+2 rule",
         ok, why.empty() ? run_stats(r) : why);
}

// --- 4: piecewise lower bound in (n, m, d) ----------------------------------

void criterion4() {
  VerificationRun r = verify_bound("thm_sigma2_nmd_lower", 7);
  bool ok = clean(r, false, true);
  std::string why = run_stats(r);

  BoundReport corner = sigma2_nmd_lower(7, 7, 4);
  if (!(corner.applicable && corner.exceptional && corner.value == Rational(57) &&
        57 == 6 * 7 + 15)) {
    ok = false;
    why = "(n,m,d)=(7,7,4) corner: expected adjusted minimum 57";
  }

  FamilyInstance inst = diam_lower_family(2, 8, 4, 10);
  IndexReport ix = indices(inst.graph);
  BoundReport at = sigma2_nmd_lower(8, 10, 4);
  if (!(inst.graph.edge_count() == 10 && ecc_profile(inst.graph).diameter == 4 &&
        ix.sigma2 == 70 && 70 == 6 * 8 + 22 && at.applicable && at.value == Rational(70))) {
    ok = false;
    why = "(n,m,d)=(8,10,4): band construction should achieve 70";
  }
  report(4, "exhaustive min sigma2 over (n, m, d) classes (n <= 7) matches the piecewise formula, incl. the d=4 adjustments",
         ok, why);
}

// --- 5: chromatic / clique sigma2 minima ------------------------------------

void criterion5() {
  VerificationRun chrom = verify_bound("thm_sigma2_chromatic_lower", 7);
  VerificationRun cliq = verify_bound("thm_sigma2_clique_lower", 7);
  bool ok = clean(chrom, true, true) && clean(cliq, true, true);
  report(5, "exhaustive min sigma2 at fixed chromatic/clique number (n <= 7) matches the three-regime formula; achievers are exactly the extremal joins",
         ok, run_stats(chrom) + "; " + run_stats(cliq));
}

// --- 6: matching-number bounds ----------------------------------------------

void criterion6() {
  VerificationRun lower = verify_bound("prop_matching01_lower", 7);
  VerificationRun s2 = verify_bound("thm_sigma2_matching_lower", 7);
  bool ok = clean(lower, true, true) && clean(s2, true, true);
  std::string why = run_stats(lower) + "; " + run_stats(s2);
  for (int n = 4; n <= 6; ++n) {
    BoundReport rep = sigma2_matching_lower(n, n / 2);
    std::int64_t complete_edges = static_cast<std::int64_t>(n) * (n - 1) / 2;
    if (!(rep.applicable && rep.exceptional && rep.value == Rational(complete_edges) &&
          rep.extremal.size() == 1 && rep.extremal[0].family == "complete")) {
      ok = false;
      why = "near-perfect matching exception wrong at n=" + std::to_string(n);
    }
  }
  report(6, "matching-number bounds (2 - k/n, 4n - 3k, 2n + 4k - 6) hold on n <= 7 with the characterized achievers; n <= 6 near-perfect cases need the complete graph",
         ok, why);
}

// --- 7: generators predict exactly what the engines measure -----------------

struct GridCheck {
  long long points = 0;
  long long bad = 0;
  std::string first;

  void take(const FamilyInstance& inst) {
    ++points;
    std::string why;
    if (!consistent(inst, why)) {
      ++bad;
      if (first.empty()) first = inst.spec.to_string() + ": " + why;
    }
  }

  static bool consistent(const FamilyInstance& inst, std::string& why) {
    const Graph& g = inst.graph;
    if (!is_connected(g)) {
      why = "disconnected";
      return false;
    }
    const Predicted& p = inst.predicted;
    IndexReport ix = indices(g);
    EccProfile prof = ecc_profile(g);
    auto miss = [&why](const char* what) {
      why = what;
      return false;
    };
    if (p.edges && *p.edges != g.edge_count()) return miss("edges");
    if (p.ecc_sum && *p.ecc_sum != ix.ecc_sum) return miss("ecc_sum");
    if (p.sigma1 && *p.sigma1 != ix.sigma1) return miss("sigma1");
    if (p.sigma2 && *p.sigma2 != ix.sigma2) return miss("sigma2");
    if (p.diameter && *p.diameter != prof.diameter) return miss("diameter");
    if (p.radius && *p.radius != prof.radius) return miss("radius");
    if (p.dominating && *p.dominating != naive::dominating(g)) return miss("dominating");
    if (g.n <= 14) {  // reference invariants are exponential; enough grid lands here
      if (p.chromatic && *p.chromatic != naive::chromatic(g)) return miss("chromatic");
      if (p.clique && *p.clique != naive::clique(g)) return miss("clique");
      if (p.matching && *p.matching != naive::matching(g)) return miss("matching");
    }
    return true;
  }
};

void criterion7() {
  GridCheck grid;

  for (int n = 5; n <= 10; ++n)
    for (int d = 2; d <= n - 2; ++d)
      for (int a = 1; a <= n - d; ++a) grid.take(double_broom(n, d, a));

  for (int n = 4; n <= 12; ++n)
    for (int d = 2; d <= n - 1; ++d) {
      grid.take(kite(n, d));
      grid.take(kite_prime(n, d));
    }
  for (int n : {8, 11})
    for (int d = 2; d <= n - 2; ++d)
      for (int t = 0; t <= n - d - 1; ++t) grid.take(kite_t(n, d, t));

  for (int n = 6; n <= 14; ++n)
    for (int k = 2; 2 * k <= n; ++k) grid.take(cycle_tail(n, k));

  for (auto [p, q, k] : {std::array<int, 3>{2, 2, 3}, {2, 3, 2}, {2, 4, 3}, {3, 3, 3},
                         {3, 4, 2}, {4, 5, 1}})
    grid.take(stratified_cycle(p, q, k));

  for (int n = 8; n <= 13; ++n)
    for (int k = 2; k <= 4; ++k)
      for (int d = 4; d <= n - 2 && k <= n - d + 1; ++d) grid.take(turan_tail(n, k, d));

  for (int n = 6; n <= 12; n += 2)
    for (int k = 2; 2 * k <= n; ++k)
      for (int d = 2; d < 2 * k; ++d) grid.take(match_clique_tail(n, k, d));

  for (int n = 5; n <= 10; ++n)
    for (int k = 2; k <= n - 1; ++k)
      for (int s = 1; s <= k - 1; ++s) {
        grid.take(join_family(n, k, s));
        if (n + s - 2 * k >= 0) grid.take(join_family(n, k, s, /*matched_pairs=*/true));
      }

  for (int n = 5; n <= 11; ++n)
    for (int d = 2; d <= n - 1; ++d)
      for (int at = 0; at <= std::max(0, d - 2); ++at) {
        grid.take(ore_extremal(n, d, at));
        grid.take(ore_extremal(n, d, at, /*high_side=*/true));
      }

  for (int i = 0; i <= 1; ++i)
    for (int n = 4; n <= 12; ++n)
      for (int d = 2; d <= n - 1; ++d) grid.take(diam_lower_family(i, n, d));
  for (int n = 7; n <= 9; ++n)
    for (int d = 2; d <= n - 1; ++d)
      for (std::int64_t m = n - 1; m <= ore_max_edges(n, d); ++m)
        grid.take(diam_lower_family(2, n, d, m));

  // Stepwise interpolation between the kites: adding the (t+1)-st clique-to-v2
  // edge set moves sigma2 by 2d^2 - (n+3)d + t + 3 once d >= 4 (the v2
  // eccentricity is then d-2; for d in {2,3} it is pinned at 2, which shifts
  // every step by +2).
  long long steps = 0;
  bool steps_ok = true;
  for (int n : {9, 10, 12, 15, 20})
    for (int d = 2; d <= std::min(n - 2, 9); ++d) {
      std::int64_t prev = indices(kite_t(n, d, 0).graph).sigma2;
      for (int t = 0; t <= n - d - 2; ++t, ++steps) {
        std::int64_t next = indices(kite_t(n, d, t + 1).graph).sigma2;
        std::int64_t want = 2LL * d * d - (n + 3LL) * d + t + 3 + (d >= 4 ? 0 : 2);
        if (next - prev != want) steps_ok = false;
        prev = next;
      }
    }

  // Stratified cycles are the self-centered witnesses: every eccentricity pk.
  bool strat_ok = true;
  for (auto [p, q, k] : {std::array<int, 3>{2, 2, 3}, {2, 5, 2}, {3, 4, 2}, {5, 6, 1}}) {
    EccProfile prof = ecc_profile(stratified_cycle(p, q, k).graph);
    if (!(prof.connected && prof.radius == p * k && prof.diameter == p * k)) strat_ok = false;
  }

  std::ostringstream os;
  os << grid.points << " grid points, " << grid.bad << " inconsistent; " << steps << " kite steps"
     << (steps_ok ? " ok" : " BAD") << "; stratified " << (strat_ok ? "ok" : "BAD");
  if (!grid.first.empty()) os << "; first: " << grid.first;
  report(7, "every generator's predicted invariants equal the measured values across the whole grid",
         grid.points >= 200 && grid.bad == 0 && steps_ok && strat_ok, os.str());
}

// --- 8: closed forms vs sequence / structural definitions -------------------

void criterion8() {
  long long bad = 0;
  std::string first;
  auto expect = [&](bool ok, const std::string& what) {
    if (!ok) {
      ++bad;
      if (first.empty()) first = what;
    }
  };

  // g_i(d): direct summation over the path eccentricity sequence vs the
  // integer-safe closed forms.
  for (std::int64_t d = 1; d <= 200; ++d) {
    std::int64_t g0 = path_contribution(0, static_cast<int>(d));
    std::int64_t g1 = path_contribution(1, static_cast<int>(d));
    std::int64_t g2 = path_contribution(2, static_cast<int>(d));
    expect(g0 == (3 * d * d + 3) / 4 + d, "g0 closed form, d=" + std::to_string(d));
    expect(12 * g1 == (d * d + d) * (7 * d + 5) - (d % 2 == 0 ? 3 * d : 0),
           "g1 closed form, d=" + std::to_string(d));
    expect(12 * g2 == (d % 2 == 0 ? 7 * d * d * d - 4 * d : 7 * d * d * d - d + 6),
           "g2 closed form, d=" + std::to_string(d));
  }

  // f_i(n,d) vs sums computed straight off the extremal tree's eccentricity
  // multiset: path interior plus n-d+1 leaves of eccentricity d hanging on
  // the two eccentricity-(d-1) ends.
  for (int n = 4; n <= 400; ++n)
    for (int d = 2; d <= std::min(n - 1, 200); ++d) {
      std::int64_t s0 = 0, s1 = 0, s2 = 0;
      for (std::int64_t j = 1; j <= d - 1; ++j) {
        std::int64_t e = std::max(j, d - j);
        s0 += e;
        s1 += e * e;
        if (j <= d - 2) s2 += e * std::max(j + 1, d - j - 1);
      }
      std::int64_t leaves = n - d + 1;
      s0 += leaves * d;
      s1 += leaves * d * d;
      s2 += leaves * d * (d - 1);
      bool ok = tree_max_bound(0, n, d) == Rational(s0, n) &&
                tree_max_bound(1, n, d) == Rational(s1) &&
                tree_max_bound(2, n, d) == Rational(s2) && tree_max_ecc_sum(n, d) == s0 &&
                s0 == static_cast<std::int64_t>(n) * d - d * d / 4 &&
                tree_max_bound(1, n, d) ==
                    Rational(12LL * n * d * d - 5LL * d * (d * d - 1) -
                                 (d % 2 == 0 ? 3LL * d : 0),
                             12);
      expect(ok, "f_i vs structural sums at n=" + std::to_string(n) + ", d=" + std::to_string(d));
    }

  // sigma0 lower bound at fixed diameter: the numerator identity
  // g0(d) + (n-d-1)*ceil(d/2) = n*ceil(d/2) + floor(d/2)*(floor(d/2)+1).
  for (std::int64_t d = 1; d <= 200; ++d) {
    std::int64_t up = (d + 1) / 2, down = d / 2;
    std::int64_t g0 = path_contribution(0, static_cast<int>(d));
    for (std::int64_t n = d + 1; n <= 400; n += 7)
      expect(g0 + (n - d - 1) * up == n * up + down * (down + 1),
             "sigma0 numerator identity, d=" + std::to_string(d));
    for (int n : {7, 50, 201, 400}) {
      if (n - 1 < d || d < 2) continue;
      BoundReport rep = sigma01_diam_lower(0, n, static_cast<int>(d));
      expect(rep.applicable && rep.value == Rational(n * up + down * (down + 1), n),
             "sigma01_diam_lower vs identity, d=" + std::to_string(d));
    }
  }

  // Fixed-diameter sigma2 floor == the (n, m, d) bound at the tree edge count.
  for (int n = 3; n <= 400; ++n)
    for (int d = 2; d <= std::min(n - 1, 200); ++d) {
      BoundReport cor = sigma2_diam_lower(n, d);
      BoundReport nmd = sigma2_nmd_lower(n, n - 1, d);
      expect(cor.applicable && nmd.applicable && cor.value == nmd.value,
             "diameter floor vs m=n-1 bound at n=" + std::to_string(n) +
                 ", d=" + std::to_string(d));
    }
  // ... and the minimizer construction lands on the bound for sampled (n,m,d).
  for (int n : {9, 12, 17, 24, 33})
    for (int d : {3, 4, 5, 7}) {
      if (d > n - 2) continue;
      std::int64_t cap = ore_max_edges(n, d);
      for (std::int64_t m :
           std::set<std::int64_t>{n - 1, n, n + 2, n + 5, (n - 1 + cap) / 2, cap}) {
        if (m < n - 1 || m > cap) continue;
        FamilyInstance inst = diam_lower_family(2, n, d, m);
        BoundReport rep = sigma2_nmd_lower(n, m, d);
        expect(rep.applicable && indices(inst.graph).sigma2 == rep.value.num &&
                   rep.value.den == 1 && inst.graph.edge_count() == m &&
                   ecc_profile(inst.graph).diameter == d,
               "minimizer vs bound at n=" + std::to_string(n) + ", d=" + std::to_string(d) +
                   ", m=" + std::to_string(m));
      }
    }

  // Three-regime chromatic minimum == brute minimum of the join-family sigma2
  // C(s,2) + 2s(n-s) + 4C(k-s,2) over s, with matching argmin sets.
  for (std::int64_t n = 3; n <= 400; ++n)
    for (std::int64_t k = 2; k <= n - 1; ++k) {
      std::int64_t best = -1;
      std::set<std::int64_t> argmin;
      for (std::int64_t s = 1; s <= k - 1; ++s) {
        std::int64_t v = s * (s - 1) / 2 + 2 * s * (n - s) + 2 * (k - s) * (k - s - 1);
        if (best < 0 || v < best) {
          best = v;
          argmin = {s};
        } else if (v == best) {
          argmin.insert(s);
        }
      }
      BoundReport rep = sigma2_chromatic_lower(static_cast<int>(n), static_cast<int>(k));
      std::set<std::int64_t> given;
      for (const FamilySpec& f : rep.extremal) given.insert(f.at("s"));
      expect(rep.applicable && rep.value == Rational(best) && given == argmin,
             "three-regime minimum at n=" + std::to_string(n) + ", k=" + std::to_string(k));
    }

  // Matching-number formulas vs the same structural sums.
  for (std::int64_t n = 4; n <= 400; ++n) {
    for (std::int64_t k = 2; k < n / 2; ++k) {
      // join(n,k,k): k dominating vertices of eccentricity 1, n-k of 2.
      BoundReport a = matching_bounds(0, static_cast<int>(n), static_cast<int>(k), false);
      BoundReport b = matching_bounds(1, static_cast<int>(n), static_cast<int>(k), false);
      expect(a.applicable && a.value == Rational(k + 2 * (n - k), n) &&
                 a.value == Rational(2 * n - k, n),
             "sigma0 matching floor at n=" + std::to_string(n));
      expect(b.applicable && b.value == Rational(k + 4 * (n - k)) &&
                 b.value == Rational(4 * n - 3 * k),
             "sigma1 matching floor at n=" + std::to_string(n));
    }
    for (std::int64_t k = 2; 2 * k <= n; ++k) {
      BoundReport s2 = sigma2_matching_lower(static_cast<int>(n), static_cast<int>(k));
      if (n <= 6 && k == n / 2) {
        expect(s2.applicable && s2.exceptional && s2.value == Rational(n * (n - 1) / 2),
               "exceptional matching floor at n=" + std::to_string(n));
      } else {
        // join with matched pairs: C(1,2)=0, 2*1*(n-1), plus k-1 edges of product 4.
        expect(s2.applicable && !s2.exceptional &&
                   s2.value == Rational(2 * (n - 1) + 4 * (k - 1)) &&
                   s2.value == Rational(2 * n + 4 * k - 6),
               "sigma2 matching floor at n=" + std::to_string(n));
      }
      BoundReport up0 = matching_bounds(0, static_cast<int>(n), static_cast<int>(k), true);
      BoundReport up1 = matching_bounds(1, static_cast<int>(n), static_cast<int>(k), true);
      if (2 * k == n) {
        expect(up0.applicable &&
                   up0.value == Rational(path_contribution(0, static_cast<int>(n) - 1), n) &&
                   up1.value == Rational(path_contribution(1, static_cast<int>(n) - 1)),
               "matching ceiling (path case) at n=" + std::to_string(n));
      } else {
        expect(up0.applicable &&
                   up0.value == tree_max_bound(0, static_cast<int>(n), static_cast<int>(2 * k)) &&
                   up1.value == tree_max_bound(1, static_cast<int>(n), static_cast<int>(2 * k)),
               "matching ceiling (tree case) at n=" + std::to_string(n));
      }
    }
  }

  // Known bad display variant of g_2 (and the f_2 display built on it):
  // 7d^3/12 + 1/12 - [4d if d even, d-6 if d odd]. Documented, not asserted.
  long long printed_off = 0, folded_off_one_twelfth = 0;
  for (std::int64_t d = 1; d <= 200; ++d) {
    std::int64_t true12 = 12 * path_contribution(2, static_cast<int>(d));
    std::int64_t bracket = d % 2 == 0 ? 4 * d : d - 6;
    if (7 * d * d * d + 1 - 12 * bracket != true12) ++printed_off;  // bracket outside /12
    if (7 * d * d * d + 1 - bracket - true12 == 1) ++folded_off_one_twelfth;
  }
  std::cout << "NOTE 8: the display variant g2(d) = 7d^3/12 + 1/12 - (4d if d even, d-6 if d odd) "
               "disagrees with the sequence definition at "
            << printed_off << "/200 d values (e.g. d=4: 21.42 vs 36); folding the bracket under "
               "the /12 still leaves it exactly 1/12 high at "
            << folded_off_one_twelfth << "/200. The f_2 display that adds n(d^2-d) to it inherits "
               "the same defect; nothing in the library uses either form."
            << std::endl;

  std::ostringstream os;
  os << bad << " grid failures";
  if (!first.empty()) os << "; first: " << first;
  report(8, "closed forms match the sequence/structural definitions on the d <= 200, n <= 400 grid",
         bad == 0, os.str());
}

// --- 9: fourth-power growth of the sigma2 maximum ---------------------------

void criterion9() {
  bool ok = true;
  std::string why;
  double lo = 2.0, hi = 0.0;
  for (int n = 60; n <= 200; ++n) {
    ScanRow row = scan_sigma2_max(n, /*exhaustive=*/false);
    std::int64_t d_star = row.point.at("d_star");
    std::int64_t target = (n + 1) / 2 + 2;
    double ratio = 32.0 * static_cast<double>(row.best_value.num) /
                   (static_cast<double>(n) * n * n * n);
    lo = std::min(lo, ratio);
    hi = std::max(hi, ratio);
    if (!(ratio >= 0.85 && ratio <= 1.15 && std::llabs(d_star - target) <= 3)) {
      ok = false;
      why = "off at n=" + std::to_string(n) + ": ratio " + std::to_string(ratio) + ", d*=" +
            std::to_string(d_star);
      break;
    }
  }
  std::ostringstream os;
  os << "ratio to n^4/32 in [" << lo << ", " << hi << "] over n = 60..200";
  report(9, "construction-mode max sigma2 tracks n^4/32 within 15%, optimal diameter within 3 of n/2 + 2",
         ok, why.empty() ? os.str() : why);
}

// --- 10: cycle-with-tail scan ------------------------------------------------

void criterion10() {
  bool ok = true;
  std::string why;
  long long bfs_rows = 0;
  for (const ScanRow& row : compare_tree_vs_cycletail({12, 18, 25, 33, 40, 52, 64})) {
    if (!row.point.count("h_bfs")) continue;
    ++bfs_rows;
    if (row.note != "bfs matches formula" ||
        row.point.at("h_bfs") != row.point.at("h_formula")) {
      ok = false;
      why = "BFS mismatch at n=" + std::to_string(row.point.at("n")) +
            ", r=" + std::to_string(row.point.at("r"));
    }
  }
  if (bfs_rows == 0) {
    ok = false;
    why = "no BFS-checked rows";
  }

  double alpha_hat = -1.0;
  for (const ScanRow& row : compare_tree_vs_cycletail({5000}))
    if (row.point.count("r_star") && row.point.at("r_star") >= 0 &&
        row.note.find("crossover") != std::string::npos)
      alpha_hat = static_cast<double>(row.best_value.num) / static_cast<double>(row.best_value.den);
  const double alpha = (7.0 - 2.0 * std::sqrt(6.0)) / 25.0;
  if (!(alpha_hat >= 0.0 && std::abs(alpha_hat - alpha) <= 0.02)) {
    ok = false;
    why = "crossover at n=5000: got " + std::to_string(alpha_hat) + ", want " +
          std::to_string(alpha) + " +/- 0.02";
  }
  std::ostringstream os;
  os << bfs_rows << " BFS-checked rows; crossover alpha " << alpha_hat << " vs " << alpha;
  report(10, "cycle-with-tail ecc sums match n*k + 3*C(r+1,2) - r by BFS; crossover fraction lands near the analytic constant",
         ok, why.empty() ? os.str() : why);
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  criterion10();
  std::cout << (failures == 0 ? "ACCEPTANCE CLEAN" : "ACCEPTANCE FAILURES: " + std::to_string(failures))
            << std::endl;
  return failures;
}
