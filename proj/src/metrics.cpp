#include "eccbounds/metrics.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace ecc {

IndexReport indices_raw(int n, const std::uint64_t* adj, const int* ecc) {
  IndexReport r;
  for (int v = 0; v < n; ++v) {
    r.ecc_sum += ecc[v];
    r.sigma1 += static_cast<std::int64_t>(ecc[v]) * ecc[v];
    std::uint64_t higher = adj[v] >> (v + 1) << (v + 1);  // neighbours above v
    while (higher) {
      int u = std::countr_zero(higher);
      r.sigma2 += static_cast<std::int64_t>(ecc[v]) * ecc[u];
      higher &= higher - 1;
    }
  }
  r.sigma0 = Rational(r.ecc_sum, n);
  return r;
}

IndexReport indices(const Graph& g) {
  int ecc[Graph::max_vertices];
  if (!ecc_raw(g.n, g.adj.data(), ecc))
    throw std::invalid_argument("indices: graph is disconnected");
  return indices_raw(g.n, g.adj.data(), ecc);
}

std::int64_t path_contribution(int i, int d) {
  if (i < 0 || i > 2) throw std::invalid_argument("path_contribution: index must be 0, 1 or 2");
  if (d < 1) throw std::invalid_argument("path_contribution: diameter must be >= 1");
  auto at = [d](int j) -> std::int64_t { return j > d - j ? j : d - j; };
  std::int64_t sum = 0;
  if (i == 2) {
    for (int j = 0; j < d; ++j) sum += at(j) * at(j + 1);
  } else {
    for (int j = 0; j <= d; ++j) sum += i == 0 ? at(j) : at(j) * at(j);
  }
  return sum;
}

static void check_tree_params(int n, int d) {
  if (n < 2) throw std::invalid_argument("tree_max_bound: need n >= 2");
  if (d == 1 && n == 2) return;
  if (d < 2 || d > n - 1)
    throw std::invalid_argument("tree_max_bound: need 2 <= d <= n-1 (d=1 only with n=2), got d=" +
                                std::to_string(d) + ", n=" + std::to_string(n));
}

Rational tree_max_bound(int i, int n, int d) {
  check_tree_params(n, d);
  std::int64_t spare = n - d - 1;  // vertices beyond a diametric path
  switch (i) {
    case 0:
      return Rational(spare * d + path_contribution(0, d), n);
    case 1:
      return Rational(spare * d * d + path_contribution(1, d));
    case 2:
      return Rational(spare * d * (d - 1) + path_contribution(2, d));
    default:
      throw std::invalid_argument("tree_max_bound: index must be 0, 1 or 2");
  }
}

std::int64_t tree_max_ecc_sum(int n, int d) {
  check_tree_params(n, d);
  return static_cast<std::int64_t>(n) * d - static_cast<std::int64_t>(d) * d / 4;
}

}  // namespace ecc
