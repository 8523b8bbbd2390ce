#include "eccbounds/graph.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace ecc {

Graph::Graph(int vertices) : n(vertices) {
  if (vertices < 1 || vertices > max_vertices)
    throw std::invalid_argument("Graph: vertex count must be in [1,64], got " +
                                std::to_string(vertices));
}

void Graph::add_edge(int u, int v) {
  if (u < 0 || u >= n || v < 0 || v >= n)
    throw std::invalid_argument("Graph::add_edge: endpoint out of range");
  if (u == v) throw std::invalid_argument("Graph::add_edge: self-loop");
  adj[u] |= 1ull << v;
  adj[v] |= 1ull << u;
}

int Graph::degree(int v) const { return std::popcount(adj[v]); }

int Graph::edge_count() const {
  int twice = 0;
  for (int v = 0; v < n; ++v) twice += std::popcount(adj[v]);
  return twice / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n; ++u) {
    std::uint64_t higher = adj[u] >> (u + 1);
    while (higher) {
      int v = u + 1 + std::countr_zero(higher);
      out.emplace_back(u, v);
      higher &= higher - 1;
    }
  }
  return out;
}

Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

std::vector<int> bfs_distances(const Graph& g, int source) {
  if (source < 0 || source >= g.n)
    throw std::invalid_argument("bfs_distances: source out of range");
  std::vector<int> dist(g.n, Graph::unreachable);
  std::uint64_t reached = 1ull << source;
  std::uint64_t frontier = reached;
  int d = 0;
  dist[source] = 0;
  while (frontier) {
    std::uint64_t next = 0;
    std::uint64_t f = frontier;
    while (f) {
      next |= g.adj[std::countr_zero(f)];
      f &= f - 1;
    }
    next &= ~reached;
    ++d;
    std::uint64_t nf = next;
    while (nf) {
      dist[std::countr_zero(nf)] = d;
      nf &= nf - 1;
    }
    reached |= next;
    frontier = next;
  }
  return dist;
}

bool connected_raw(int n, const std::uint64_t* adj) {
  std::uint64_t full = n == 64 ? ~0ull : ((1ull << n) - 1);
  std::uint64_t reached = 1ull;
  std::uint64_t frontier = 1ull;
  while (frontier) {
    std::uint64_t next = 0;
    while (frontier) {
      next |= adj[std::countr_zero(frontier)];
      frontier &= frontier - 1;
    }
    frontier = next & ~reached;
    reached |= frontier;
  }
  return reached == full;
}

bool ecc_raw(int n, const std::uint64_t* adj, int* ecc) {
  std::uint64_t full = n == 64 ? ~0ull : ((1ull << n) - 1);
  for (int s = 0; s < n; ++s) {
    std::uint64_t reached = 1ull << s;
    std::uint64_t frontier = reached;
    int d = 0;
    while (true) {
      std::uint64_t next = 0;
      std::uint64_t f = frontier;
      while (f) {
        next |= adj[std::countr_zero(f)];
        f &= f - 1;
      }
      next &= ~reached;
      if (!next) break;
      reached |= next;
      frontier = next;
      ++d;
    }
    if (reached != full) return false;  // every BFS sees the whole graph or none does
    ecc[s] = d;
  }
  return true;
}

bool is_connected(const Graph& g) { return connected_raw(g.n, g.adj.data()); }

EccProfile ecc_profile(const Graph& g) {
  EccProfile p;
  int ecc[Graph::max_vertices];
  if (!ecc_raw(g.n, g.adj.data(), ecc)) return p;
  p.connected = true;
  p.ecc.assign(ecc, ecc + g.n);
  p.radius = p.diameter = ecc[0];
  for (int v = 1; v < g.n; ++v) {
    if (ecc[v] < p.radius) p.radius = ecc[v];
    if (ecc[v] > p.diameter) p.diameter = ecc[v];
  }
  return p;
}

std::vector<int> diametric_path(const Graph& g) {
  EccProfile p = ecc_profile(g);
  if (!p.connected) throw std::invalid_argument("diametric_path: graph is disconnected");
  int source = 0;
  while (p.ecc[source] != p.diameter) ++source;
  std::vector<int> dist = bfs_distances(g, source);
  int target = 0;
  while (dist[target] != p.diameter) ++target;
  // Walk back from the target picking the smallest-index predecessor.
  std::vector<int> path(p.diameter + 1);
  int cur = target;
  for (int step = p.diameter; step >= 0; --step) {
    path[step] = cur;
    if (step == 0) break;
    for (int u = 0; u < g.n; ++u) {
      if (dist[u] == step - 1 && g.has_edge(u, cur)) {
        cur = u;
        break;
      }
    }
  }
  return path;
}

}  // namespace ecc
