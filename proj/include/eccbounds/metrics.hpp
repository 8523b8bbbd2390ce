#pragma once

#include <cstdint>

#include "eccbounds/graph.hpp"
#include "eccbounds/rational.hpp"

namespace ecc {

// The three eccentricity indices of a connected graph:
//   sigma0 = average eccentricity          (exact rational, ecc_sum / n)
//   sigma1 = sum of squared eccentricities
//   sigma2 = sum of ecc(u)*ecc(v) over edges uv
struct IndexReport {
  std::int64_t ecc_sum = 0;
  Rational sigma0;
  std::int64_t sigma1 = 0;
  std::int64_t sigma2 = 0;
};

// Throws std::invalid_argument on disconnected input.
IndexReport indices(const Graph& g);

// Raw variant used by the enumeration sweeps: eccentricities already known.
IndexReport indices_raw(int n, const std::uint64_t* adj, const int* ecc);

// Contribution of a diametric path with diameter d >= 1. The path has d+1
// vertices whose eccentricities are max(j, d-j) for positions j = 0..d --
// i.e. d, d-1, ... down to the central value and back up to d.
//   i = 0: sum of the sequence
//   i = 1: sum of squares
//   i = 2: sum of products of consecutive entries
// Computed by direct summation over the sequence; the closed forms are
// regression-tested against this in the acceptance suite.
std::int64_t path_contribution(int i, int d);

// Maximum of sigma_i over trees with n vertices and diameter d:
//   f_0(n,d) = [(n-d-1)d + g_0(d)] / n
//   f_1(n,d) = (n-d-1)d^2     + g_1(d)
//   f_2(n,d) = (n-d-1)d(d-1)  + g_2(d)
// Attained exactly by the double brooms (see constructions). Requires
// 2 <= d <= n-1, or d = 1 with n = 2.
Rational tree_max_bound(int i, int n, int d);

// n * f_0(n,d) = n*d - floor(d^2/4); handy integer form.
std::int64_t tree_max_ecc_sum(int n, int d);

}  // namespace ecc
