#include "eccbounds/enumerate.hpp"

#include <algorithm>
#include <stdexcept>

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace ecc {

std::vector<std::pair<int, int>> pair_order(int n) {
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) pairs.emplace_back(i, j);
  return pairs;
}

Graph graph_from_mask(int n, std::uint64_t mask) {
  Graph g(n);
  int b = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++b)
      if (mask >> b & 1) g.add_edge(i, j);
  return g;
}

namespace {

void check_graph_budget(int n) {
  if (n < 1 || n > kEnumGraphBudget)
    throw std::invalid_argument("sweep_connected: n must be in [1," +
                                std::to_string(kEnumGraphBudget) + "]");
}

// Feeds acc every connected graph whose mask lies in [lo, hi).
void run_mask_range(int n, std::uint64_t lo, std::uint64_t hi, SweepAccumulator& acc) {
  Graph g(n);
  for (std::uint64_t mask = lo; mask < hi; ++mask) {
    int b = 0;
    for (int j = 1; j < n; ++j) {
      std::uint64_t row = 0;
      for (int i = 0; i < j; ++i, ++b) row |= (mask >> b & 1) << i;
      g.adj[j] = row;
      // mirror into the lower rows
      for (int i = 0; i < j; ++i)
        g.adj[i] = (g.adj[i] & ~(1ull << j)) | ((row >> i & 1) << j);
    }
    if (connected_raw(n, g.adj.data())) acc.see(g);
  }
}

// Prüfer-style decode; seq has length n-2 with entries in [0, n).
Graph tree_from_sequence(int n, const int* seq) {
  Graph g(n);
  if (n <= 1) return g;
  std::array<int, Graph::max_vertices> degree{};
  for (int v = 0; v < n; ++v) degree[v] = 1;
  for (int i = 0; i < n - 2; ++i) ++degree[seq[i]];
  int ptr = 0;
  while (degree[ptr] != 1) ++ptr;
  int leaf = ptr;
  for (int i = 0; i < n - 2; ++i) {
    int x = seq[i];
    g.add_edge(leaf, x);
    if (--degree[x] == 1 && x < ptr) {
      leaf = x;
    } else {
      do ++ptr;
      while (degree[ptr] != 1);
      leaf = ptr;
    }
  }
  g.add_edge(leaf, n - 1);
  return g;
}

// Trees whose sequence starts with the given first symbol (or all trees when
// first < 0 / n <= 3 makes the split pointless).
void run_tree_range(int n, int first, SweepAccumulator& acc) {
  if (n <= 2) {
    acc.see(tree_from_sequence(n, nullptr));
    return;
  }
  std::array<int, Graph::max_vertices> seq{};
  int fixed = first >= 0 ? 1 : 0;
  if (fixed) seq[0] = first;
  // odometer over the free positions
  std::uint64_t total = 1;
  for (int i = fixed; i < n - 2; ++i) total *= static_cast<std::uint64_t>(n);
  for (std::uint64_t it = 0;; ++it) {
    acc.see(tree_from_sequence(n, seq.data()));
    if (it + 1 == total) break;
    for (int pos = n - 3; pos >= fixed; --pos) {
      if (++seq[pos] < n) break;
      seq[pos] = 0;
    }
  }
}

}  // namespace

void sweep_connected(int n, SweepAccumulator& acc, int jobs) {
  check_graph_budget(n);
  int total_bits = n * (n - 1) / 2;
  if (jobs <= 1 || total_bits < 12) {
    run_mask_range(n, 0, 1ull << total_bits, acc);
    return;
  }
  // Fixed chunking by the top mask bits keeps the merge order independent of
  // the thread count.
  int chunk_bits = std::min(8, total_bits - 4);
  int lo_bits = total_bits - chunk_bits;
  std::int64_t chunks = 1ll << chunk_bits;
  std::vector<std::unique_ptr<SweepAccumulator>> parts(chunks);
#if defined(_OPENMP)
#pragma omp parallel for schedule(dynamic) num_threads(jobs)
#endif
  for (std::int64_t c = 0; c < chunks; ++c) {
    auto part = acc.fork();
    std::uint64_t base = static_cast<std::uint64_t>(c) << lo_bits;
    run_mask_range(n, base, base + (1ull << lo_bits), *part);
    parts[c] = std::move(part);
  }
  for (auto& part : parts) acc.merge(*part);
}

void sweep_trees(int n, SweepAccumulator& acc, int jobs) {
  if (n < 1 || n > kEnumTreeBudget)
    throw std::invalid_argument("sweep_trees: n must be in [1," +
                                std::to_string(kEnumTreeBudget) + "]");
  if (jobs <= 1 || n <= 3) {
    run_tree_range(n, -1, acc);
    return;
  }
  std::vector<std::unique_ptr<SweepAccumulator>> parts(n);
#if defined(_OPENMP)
#pragma omp parallel for schedule(dynamic) num_threads(jobs)
#endif
  for (int first = 0; first < n; ++first) {
    auto part = acc.fork();
    run_tree_range(n, first, *part);
    parts[first] = std::move(part);
  }
  for (auto& part : parts) acc.merge(*part);
}

namespace {

struct CountAccumulator final : SweepAccumulator {
  std::uint64_t count = 0;
  std::unique_ptr<SweepAccumulator> fork() const override {
    return std::make_unique<CountAccumulator>();
  }
  void see(const Graph&) override { ++count; }
  void merge(SweepAccumulator& chunk) override {
    count += static_cast<CountAccumulator&>(chunk).count;
  }
};

}  // namespace

std::uint64_t connected_graph_count(int n, int jobs) {
  CountAccumulator acc;
  sweep_connected(n, acc, jobs);
  return acc.count;
}

}  // namespace ecc
