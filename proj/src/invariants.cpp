#include "eccbounds/invariants.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace ecc {

// ---------------------------------------------------------------------------
// Clique number: classic bitset branch and bound. Candidate sets are single
// words, the popcount bound prunes hopeless branches.

namespace {

struct CliqueSearch {
  const std::uint64_t* adj;
  int best = 0;

  void expand(std::uint64_t cand, int size) {
    if (size > best) best = size;
    while (cand) {
      if (size + std::popcount(cand) <= best) return;
      int v = std::countr_zero(cand);
      cand &= cand - 1;
      expand(adj[v] & cand, size + 1);
    }
  }
};

}  // namespace

int clique_number(const Graph& g) {
  if (g.n > 32) throw std::invalid_argument("clique_number: exact search budget is n <= 32");
  CliqueSearch s{g.adj.data()};
  s.expand(g.full_mask(), 0);
  return s.best;
}

// ---------------------------------------------------------------------------
// Chromatic number: try k-colorability for increasing k, starting at the
// clique number. The backtracking picks the most saturated uncolored vertex
// and never opens more than one fresh color per level, which kills color
// permutation symmetry.

namespace {

struct ColorSearch {
  const Graph& g;
  int k;
  std::vector<int> color;        // -1 = uncolored
  std::vector<std::uint64_t> used_at;  // bitmask of colors on neighbours

  explicit ColorSearch(const Graph& graph, int colors)
      : g(graph), k(colors), color(graph.n, -1), used_at(graph.n, 0) {}

  bool solve(int colored, int max_used) {
    if (colored == g.n) return true;
    int pick = -1, pick_sat = -1, pick_deg = -1;
    for (int v = 0; v < g.n; ++v) {
      if (color[v] != -1) continue;
      int sat = std::popcount(used_at[v]);
      int deg = g.degree(v);
      if (sat > pick_sat || (sat == pick_sat && deg > pick_deg)) {
        pick = v;
        pick_sat = sat;
        pick_deg = deg;
      }
    }
    int limit = std::min(k - 1, max_used + 1);
    for (int c = 0; c <= limit; ++c) {
      if ((used_at[pick] >> c) & 1) continue;
      color[pick] = c;
      std::uint64_t nb = g.adj[pick];
      while (nb) {
        used_at[std::countr_zero(nb)] |= 1ull << c;
        nb &= nb - 1;
      }
      if (solve(colored + 1, std::max(max_used, c))) return true;
      // undo: recompute neighbour masks touched by this assignment
      color[pick] = -1;
      nb = g.adj[pick];
      while (nb) {
        int u = std::countr_zero(nb);
        nb &= nb - 1;
        std::uint64_t mask = 0;
        std::uint64_t un = g.adj[u];
        while (un) {
          int w = std::countr_zero(un);
          un &= un - 1;
          if (color[w] != -1) mask |= 1ull << color[w];
        }
        used_at[u] = mask;
      }
    }
    return false;
  }
};

}  // namespace

int chromatic_number(const Graph& g) {
  if (g.n > 16) throw std::invalid_argument("chromatic_number: exact search budget is n <= 16");
  if (g.edge_count() == 0) return g.n >= 1 ? 1 : 0;
  int lo = clique_number(g);
  for (int k = lo; k <= g.n; ++k) {
    ColorSearch s(g, k);
    if (s.solve(0, -1)) return k;
  }
  return g.n;  // unreachable: K_n is always n-colorable
}

// ---------------------------------------------------------------------------
// Matching number: blossom algorithm. Augmenting BFS from every free vertex;
// odd cycles are contracted by remapping their vertices to a common base.

namespace {

struct Blossom {
  int n;
  const Graph& g;
  std::vector<int> match, parent, base;
  std::vector<bool> used, in_blossom;

  explicit Blossom(const Graph& graph)
      : n(graph.n), g(graph), match(n, -1), parent(n, -1), base(n), used(n), in_blossom(n) {}

  int lowest_common_base(int a, int b) {
    std::vector<bool> seen(n, false);
    while (true) {
      a = base[a];
      seen[a] = true;
      if (match[a] == -1) break;
      a = parent[match[a]];
    }
    while (true) {
      b = base[b];
      if (seen[b]) return b;
      b = parent[match[b]];
    }
  }

  void mark_path(int v, int stop, int child) {
    while (base[v] != stop) {
      in_blossom[base[v]] = true;
      in_blossom[base[match[v]]] = true;
      parent[v] = child;
      child = match[v];
      v = parent[match[v]];
    }
  }

  bool augment_from(int root) {
    std::fill(used.begin(), used.end(), false);
    std::fill(parent.begin(), parent.end(), -1);
    for (int i = 0; i < n; ++i) base[i] = i;
    used[root] = true;
    std::vector<int> queue = {root};
    for (std::size_t qh = 0; qh < queue.size(); ++qh) {
      int v = queue[qh];
      std::uint64_t nb = g.adj[v];
      while (nb) {
        int to = std::countr_zero(nb);
        nb &= nb - 1;
        if (base[v] == base[to] || match[v] == to) continue;
        if (to == root || (match[to] != -1 && parent[match[to]] != -1)) {
          // odd cycle: contract the blossom around its base
          int stop = lowest_common_base(v, to);
          std::fill(in_blossom.begin(), in_blossom.end(), false);
          mark_path(v, stop, to);
          mark_path(to, stop, v);
          for (int i = 0; i < n; ++i) {
            if (in_blossom[base[i]]) {
              base[i] = stop;
              if (!used[i]) {
                used[i] = true;
                queue.push_back(i);
              }
            }
          }
        } else if (parent[to] == -1) {
          parent[to] = v;
          if (match[to] == -1) {
            // free vertex reached: flip matched edges along the path
            int u = to;
            while (u != -1) {
              int pv = parent[u];
              int next = match[pv];
              match[u] = pv;
              match[pv] = u;
              u = next;
            }
            return true;
          }
          used[match[to]] = true;
          queue.push_back(match[to]);
        }
      }
    }
    return false;
  }

  int run() {
    int size = 0;
    for (int v = 0; v < n; ++v)
      if (match[v] == -1 && augment_from(v)) ++size;
    return size;
  }
};

}  // namespace

int matching_number(const Graph& g) {
  if (g.n > 32) throw std::invalid_argument("matching_number: exact search budget is n <= 32");
  Blossom b(g);
  return b.run();
}

int dominating_count(const Graph& g) {
  int count = 0;
  for (int v = 0; v < g.n; ++v)
    if (g.degree(v) == g.n - 1) ++count;
  return count;
}

InvariantSet invariant_set(const Graph& g) {
  InvariantSet s;
  if (g.n <= 16) s.chromatic = chromatic_number(g);
  if (g.n <= 32) {
    s.clique = clique_number(g);
    s.matching = matching_number(g);
  }
  s.dominating = dominating_count(g);
  return s;
}

}  // namespace ecc
