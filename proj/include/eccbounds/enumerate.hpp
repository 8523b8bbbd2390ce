#pragma once

#include <cstdint>
#include <memory>
#include <utility>
#include <vector>

#include "eccbounds/graph.hpp"

namespace ecc {

inline constexpr int kEnumGraphBudget = 8;
inline constexpr int kEnumTreeBudget = 10;

// Visitor over a graph stream that forms a merge monoid. The parallel sweep
// forks one accumulator per mask-prefix chunk, feeds it graphs in mask order
// within the chunk, and merges the chunk results back in chunk order, so the
// outcome matches the serial reference pass regardless of thread count.
struct SweepAccumulator {
  virtual ~SweepAccumulator() = default;
  virtual std::unique_ptr<SweepAccumulator> fork() const = 0;
  virtual void see(const Graph& g) = 0;
  virtual void merge(SweepAccumulator& chunk) = 0;
};

// Upper-triangle pair order used for edge masks: (0,1), (0,2), (1,2), (0,3),
// ... — column-major, the same order graph6 packs its bits.
std::vector<std::pair<int, int>> pair_order(int n);
Graph graph_from_mask(int n, std::uint64_t mask);

// Every connected labeled graph on n vertices exactly once, in edge-mask
// order. jobs <= 1 takes the plain serial loop (the reference
// implementation); jobs > 1 splits the mask space into fixed prefix chunks
// for an OpenMP team.
void sweep_connected(int n, SweepAccumulator& acc, int jobs = 1);

// Every labeled tree on n vertices exactly once (n^(n-2) of them), decoded
// from length-(n-2) sequences in lexicographic order.
void sweep_trees(int n, SweepAccumulator& acc, int jobs = 1);

std::uint64_t connected_graph_count(int n, int jobs = 1);

}  // namespace ecc
