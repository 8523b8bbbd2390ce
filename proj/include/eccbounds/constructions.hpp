#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "eccbounds/graph.hpp"

namespace ecc {

// A parameterized family name plus integer parameters, printable as e.g.
// "kite:n=7,d=4". Used to address generators from the CLI and to describe
// extremal families inside bound reports (where some parameters -- such as
// the leaf split of a double broom -- may be left open to denote the whole
// family).
struct FamilySpec {
  std::string family;
  std::vector<std::pair<std::string, std::int64_t>> params;

  std::int64_t at(const std::string& key) const;            // throws if absent
  std::optional<std::int64_t> get(const std::string& key) const;
  std::string to_string() const;
  static FamilySpec parse(const std::string& text);         // throws on syntax errors
};

// Values a generator promises about its output. Everything present here is
// asserted by construction and cross-checked against the metrics and
// invariant engines in the tests.
struct Predicted {
  std::optional<std::int64_t> ecc_sum;
  std::optional<std::int64_t> sigma1;
  std::optional<std::int64_t> sigma2;
  std::optional<std::int64_t> edges;
  std::optional<int> diameter;
  std::optional<int> radius;
  std::optional<int> chromatic;
  std::optional<int> clique;
  std::optional<int> matching;
  std::optional<int> dominating;
};

struct FamilyInstance {
  FamilySpec spec;
  Graph graph;
  Predicted predicted;
  std::string note;  // formula applicability remarks etc.
};

// --- basic graphs and combinators -----------------------------------------

Graph path_graph(int n);
Graph cycle_graph(int n);       // n >= 3
Graph star_graph(int n);        // center 0
Graph complete_graph(int n);
Graph empty_graph(int n);
Graph turan_graph(int n, int r);  // parts in order, sizes descending
Graph join(const Graph& a, const Graph& b);            // a's vertices first
Graph disjoint_union(const Graph& a, const Graph& b);
Graph replicate(int k, const Graph& g);                // k disjoint copies

// --- named families ---------------------------------------------------------
// All generators use frozen vertex numbering conventions (documented at each
// definition) so that outputs are reproducible byte for byte.

// Spine of d-1 vertices with a leaves on one end and n-d+1-a on the other;
// diameter d. These trees maximize every index among trees with given (n,d).
FamilyInstance double_broom(int n, int d, int a);

// Path v_0..v_d plus an (n-d-1)-clique joined to v_0 and v_1.
FamilyInstance kite(int n, int d);

// As kite, with the clique also joined to v_2.
FamilyInstance kite_prime(int n, int d);

// Interpolation: first t clique vertices are joined to v_2 as well.
FamilyInstance kite_t(int n, int d, int t);

// Cycle C_{2k} with a path through the remaining n-2k vertices grown from
// cycle vertex 0. Diameter n-k.
FamilyInstance cycle_tail(int n, int k);

// Block for the stratified-cycle construction: a path x = 0,..,p = y plus
// q-p extra vertices, each adjacent to two path vertices at distance 2, so
// that every vertex v satisfies d(v,x) + d(v,y) = p.
struct StratifiedBlock {
  Graph graph;
  int p = 0;  // terminals are vertices 0 and p
  int q = 0;  // block has q+1 vertices
};
StratifiedBlock stratified_block(int p, int q);

// 2k copies of the block merged cyclically (y_i = x_{i+1}): a graph on 2kq
// vertices in which every vertex has eccentricity pk.
FamilyInstance stratified_cycle(const StratifiedBlock& block, int k);
FamilyInstance stratified_cycle(int p, int q, int k);

// Turan graph T_{n-d+1,k} with a path of d-1 vertices whose endpoint z is
// joined to one largest part. sigma2 formula asserted for d >= 4.
FamilyInstance turan_tail(int n, int k, int d);

// Path of d-1 spine vertices, n-2k+1 leaves on one end, a (2k-d)-clique
// joined to the other end; matching number k (asserted for even n).
FamilyInstance match_clique_tail(int n, int k, int d);

// K_s joined to (K_{k-s} + empty(n-k)); with matched_pairs, the middle clique
// is replaced by k-s disjoint edges: K_s joined to ((k-s)K_2 + empty(n+s-2k)).
FamilyInstance join_family(int n, int k, int s, bool matched_pairs = false);

// Edge-maximal graph of diameter d: path v_0..v_d plus an (n-d-1)-clique
// joined to three consecutive path vertices starting at `at` (mirrored to the
// far end when high_side is set).
FamilyInstance ore_extremal(int n, int d, int at = 0, bool high_side = false);

// Equality constructions for the lower bounds at fixed diameter.
//   i in {0,1}: path plus copies of a central vertex (m must be absent);
//   i = 2:      the minimizer of sigma2 for the given edge count m
//               (m defaults to n-1, the tree case).
FamilyInstance diam_lower_family(int i, int n, int d,
                                 std::optional<std::int64_t> m = std::nullopt);

// Dispatcher used by the CLI: builds any family from its spec string form.
// Recognized family names: path, cycle, star, complete, empty, turan,
// double_broom, kite, kite_prime, kite_t, cycle_tail, strat_block,
// strat_cycle, turan_tail, match_clique_tail, join, ore, diam_lower.
FamilyInstance make_family(const FamilySpec& spec);

std::vector<std::string> known_families();

}  // namespace ecc
