#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

namespace ecc {

// Simple undirected graph on at most 64 vertices. Row v is a bitmask of the
// neighbours of v, so BFS layers, degree counts and edge iteration are all
// single-word operations. Value semantics throughout; instances are built
// once and never mutated afterwards except through add_edge during setup.
struct Graph {
  static constexpr int max_vertices = 64;
  static constexpr int unreachable = -1;  // marker used by bfs_distances

  int n = 0;
  std::array<std::uint64_t, max_vertices> adj{};

  Graph() = default;
  explicit Graph(int vertices);

  std::uint64_t full_mask() const {
    return n == 64 ? ~0ull : ((1ull << n) - 1);
  }

  void add_edge(int u, int v);
  bool has_edge(int u, int v) const {
    return (adj[u] >> v) & 1ull;
  }
  int degree(int v) const;
  int edge_count() const;
  std::vector<std::pair<int, int>> edges() const;  // pairs (u,v) with u < v
};

// Builds a graph from an explicit edge list. Throws std::invalid_argument on
// vertex count out of range, endpoints out of range, or self-loops. Duplicate
// edges are tolerated (the adjacency bit is simply set twice).
Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& edges);

// BFS distances from `source`; unreachable vertices get Graph::unreachable.
std::vector<int> bfs_distances(const Graph& g, int source);

bool is_connected(const Graph& g);

// Eccentricity profile of a connected graph. For disconnected input,
// `connected` is false, `ecc` is empty, and radius/diameter are -1.
struct EccProfile {
  std::vector<int> ecc;
  int radius = -1;
  int diameter = -1;
  bool connected = false;
};

EccProfile ecc_profile(const Graph& g);

// One shortest path realizing the diameter, as a vertex sequence. Ties are
// broken deterministically: smallest source, then smallest target, then the
// smallest-index BFS parent at every step back from the target.
// Throws std::invalid_argument on disconnected input.
std::vector<int> diametric_path(const Graph& g);

// ---------------------------------------------------------------------------
// Raw kernels. The enumeration sweeps build rows into a stack array and call
// these directly instead of materializing Graph objects; the Graph-level
// functions above forward here.

// Fills ecc[0..n) and returns true iff the graph is connected. On
// disconnected input returns false and the ecc contents are unspecified.
bool ecc_raw(int n, const std::uint64_t* adj, int* ecc);

bool connected_raw(int n, const std::uint64_t* adj);

}  // namespace ecc
