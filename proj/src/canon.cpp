#include "eccbounds/canon.hpp"

#include <stdexcept>

#include "eccbounds/graph6.hpp"

namespace ecc {

namespace {

struct CanonSearch {
  const Graph& g;
  int n;
  int total_bits;
  std::uint64_t best;       // best complete code found so far
  int perm[kCanonBudget];   // perm[level] = original vertex at that position
  std::uint64_t used = 0;

  explicit CanonSearch(const Graph& graph)
      : g(graph), n(graph.n), total_bits(graph.n * (graph.n - 1) / 2), best(~0ull) {}

  // prefix = code bits accumulated so far (levels 0..level-1), `bits` of them.
  void place(int level, std::uint64_t prefix, int bits) {
    if (level == n) {
      if (prefix < best) best = prefix;
      return;
    }
    for (int u = 0; u < n; ++u) {
      if ((used >> u) & 1) continue;
      std::uint64_t chunk = 0;
      for (int i = 0; i < level; ++i)
        chunk = (chunk << 1) | ((g.adj[u] >> perm[i]) & 1ull);
      std::uint64_t next = (prefix << level) | chunk;
      int next_bits = bits + level;
      // Compare against the same-length prefix of the best code.
      if (best != ~0ull && next > (best >> (total_bits - next_bits))) continue;
      perm[level] = u;
      used |= 1ull << u;
      place(level + 1, next, next_bits);
      used &= ~(1ull << u);
    }
  }
};

}  // namespace

std::uint64_t identity_code(const Graph& g) {
  if (g.n > kCanonBudget)
    throw std::invalid_argument("identity_code: canonical labeling budget is n <= 10");
  std::uint64_t code = 0;
  for (int j = 1; j < g.n; ++j)
    for (int i = 0; i < j; ++i) code = (code << 1) | (g.has_edge(i, j) ? 1ull : 0ull);
  return code;
}

std::uint64_t canonical_code(const Graph& g) {
  if (g.n > kCanonBudget)
    throw std::invalid_argument("canonical_code: canonical labeling budget is n <= 10");
  if (g.n == 1) return 0;
  CanonSearch s(g);
  s.best = identity_code(g);
  s.place(0, 0, 0);
  return s.best;
}

Graph canonical_form(const Graph& g) {
  std::uint64_t code = canonical_code(g);
  Graph out(g.n);
  int bit = g.n * (g.n - 1) / 2;
  for (int j = 1; j < g.n; ++j)
    for (int i = 0; i < j; ++i)
      if ((code >> --bit) & 1ull) out.add_edge(i, j);
  return out;
}

std::string canonical_graph6(const Graph& g) { return graph6_encode(canonical_form(g)); }

}  // namespace ecc
