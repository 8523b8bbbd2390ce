#pragma once

#include <cstdint>
#include <string>

#include "eccbounds/graph.hpp"

namespace ecc {

// Canonical labeling by brute force: the canonical code of a graph is the
// minimum, over all vertex permutations, of the upper-triangle bit string in
// column-major order (bit (i,j) for j = 1..n-1, i = 0..j-1, first bit most
// significant). Two graphs are isomorphic iff their codes are equal.
//
// The search places one vertex per level and prunes any branch whose partial
// code already exceeds the best one found, which keeps typical inputs fast;
// the worst case is still factorial, hence the budget n <= 10 (codes fit in
// 45 bits).

inline constexpr int kCanonBudget = 10;

std::uint64_t identity_code(const Graph& g);   // code of the labeling as-is
std::uint64_t canonical_code(const Graph& g);  // minimum over permutations

Graph canonical_form(const Graph& g);          // relabeled to the canonical code

std::string canonical_graph6(const Graph& g);  // graph6 of canonical_form

}  // namespace ecc
