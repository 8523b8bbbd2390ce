#pragma once

// Slow, obviously-correct reference implementations. Test-only: these share
// no code with the library so they can serve as independent oracles.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <queue>
#include <vector>

#include "eccbounds/graph.hpp"

namespace naive {

inline std::vector<std::vector<int>> adj_list(const ecc::Graph& g) {
  std::vector<std::vector<int>> adj(g.n);
  for (auto [u, v] : g.edges()) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  return adj;
}

inline std::vector<int> bfs(const std::vector<std::vector<int>>& adj, int src) {
  std::vector<int> dist(adj.size(), -1);
  std::queue<int> q;
  dist[src] = 0;
  q.push(src);
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int v : adj[u])
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        q.push(v);
      }
  }
  return dist;
}

struct Indices {
  bool connected = true;
  std::int64_t ecc_sum = 0, sigma1 = 0, sigma2 = 0;
};

inline Indices indices(const ecc::Graph& g) {
  auto adj = adj_list(g);
  std::vector<int> ecc(g.n, 0);
  Indices out;
  for (int v = 0; v < g.n; ++v) {
    auto dist = bfs(adj, v);
    for (int u = 0; u < g.n; ++u) {
      if (dist[u] < 0) out.connected = false;
      ecc[v] = std::max(ecc[v], dist[u]);
    }
    out.ecc_sum += ecc[v];
    out.sigma1 += static_cast<std::int64_t>(ecc[v]) * ecc[v];
  }
  for (auto [u, v] : g.edges())
    out.sigma2 += static_cast<std::int64_t>(ecc[u]) * ecc[v];
  return out;
}

inline bool colorable(const ecc::Graph& g, int k, std::vector<int>& color, int v) {
  if (v == g.n) return true;
  for (int c = 0; c < k; ++c) {
    bool ok = true;
    for (int u = 0; u < v; ++u)
      if (color[u] == c && g.has_edge(u, v)) {
        ok = false;
        break;
      }
    if (ok) {
      color[v] = c;
      if (colorable(g, k, color, v + 1)) return true;
      color[v] = -1;
    }
  }
  return false;
}

inline int chromatic(const ecc::Graph& g) {
  for (int k = 1;; ++k) {
    std::vector<int> color(g.n, -1);
    if (colorable(g, k, color, 0)) return k;
  }
}

inline int clique(const ecc::Graph& g) {  // subset sweep, fine for n <= 16
  int best = 0;
  for (std::uint32_t mask = 1; mask < (1u << g.n); ++mask) {
    bool ok = true;
    for (int u = 0; u < g.n && ok; ++u)
      for (int v = u + 1; v < g.n && ok; ++v)
        if ((mask >> u & 1) && (mask >> v & 1) && !g.has_edge(u, v)) ok = false;
    if (ok) best = std::max(best, std::popcount(mask));
  }
  return best;
}

inline int matching_rec(const ecc::Graph& g, std::uint32_t mask, std::vector<int>& memo) {
  if (mask == 0) return 0;
  int& m = memo[mask];
  if (m >= 0) return m;
  int u = std::countr_zero(mask);
  m = matching_rec(g, mask & (mask - 1), memo);  // leave u unmatched
  for (int v = u + 1; v < g.n; ++v)
    if ((mask >> v & 1) && g.has_edge(u, v))
      m = std::max(m, 1 + matching_rec(g, mask & ~(1u << u) & ~(1u << v), memo));
  return m;
}

inline int matching(const ecc::Graph& g) {  // bitmask DP, fine for n <= 16
  std::vector<int> memo(1u << g.n, -1);
  return matching_rec(g, (1u << g.n) - 1, memo);
}

inline int dominating(const ecc::Graph& g) {
  int count = 0;
  for (int v = 0; v < g.n; ++v)
    if (g.degree(v) == g.n - 1) ++count;
  return count;
}

}  // namespace naive
