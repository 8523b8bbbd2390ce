#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "eccbounds/rational.hpp"

namespace ecc {

struct ScanRow {
  std::string experiment;
  std::map<std::string, std::int64_t> point;
  Rational best_value;
  std::string argmax_class;  // TREE / KITE / KITE_PRIME / CYCLE_LIKE / OTHER
  std::string witness_graph6;
  std::string note;
};

// For each d in 2..n-1 and index i in {0,1}: the exhaustive max of sigma_i
// over connected diameter-d graphs, witness tie-broken by smallest canonical
// form. Final summary row reports the least d from which every larger
// diameter is tree-dominated for both indices.
std::vector<ScanRow> scan_threshold_dn(int n, int jobs = 1);

// Cycle-with-tail ecc sum vs best tree at the same diameter, r = n-2k rising
// from the parity of n up to n/3; BFS cross-check whenever the graph fits in
// a Graph. Appends a crossover summary row per n with alpha = r*/n.
std::vector<ScanRow> compare_tree_vs_cycletail(const std::vector<int>& n_list);

// Max sigma2: exhaustive sweep for n within the enumeration budget, otherwise
// the best kite-family value over all diameters with its optimizing d.
ScanRow scan_sigma2_max(int n, bool exhaustive, int jobs = 1);

}  // namespace ecc
