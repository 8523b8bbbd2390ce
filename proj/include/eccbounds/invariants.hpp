#pragma once

#include <optional>

#include "eccbounds/graph.hpp"

namespace ecc {

// Exact structural invariants. All algorithms are exact and deterministic;
// the size budgets keep worst-case running time sane and are enforced with
// std::invalid_argument.

// Exact chromatic number via branch and bound (clique lower bound, greedy
// upper bound, saturation-guided backtracking). Budget: n <= 16.
int chromatic_number(const Graph& g);

// Exact clique number via bitset branch and bound. Budget: n <= 32.
int clique_number(const Graph& g);

// Exact matching number. Standard blossom (augmenting paths with odd-cycle
// contraction), correct on non-bipartite graphs. Budget: n <= 32.
int matching_number(const Graph& g);

// Number of dominating vertices (degree n-1). No budget.
int dominating_count(const Graph& g);

struct InvariantSet {
  std::optional<int> chromatic;  // absent when n exceeds the search budget
  std::optional<int> clique;
  std::optional<int> matching;
  int dominating = 0;
};

// Computes whatever fits the budgets and leaves the rest empty.
InvariantSet invariant_set(const Graph& g);

}  // namespace ecc
