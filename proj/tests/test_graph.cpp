#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "eccbounds/canon.hpp"
#include "eccbounds/enumerate.hpp"
#include "eccbounds/graph.hpp"
#include "eccbounds/graph6.hpp"

using namespace ecc;

TEST_CASE("from_edge_list basics") {
  Graph g = from_edge_list(4, {{0, 1}, {1, 2}, {2, 3}, {0, 1}});  // dup ok
  CHECK(g.n == 4);
  CHECK(g.edge_count() == 3);
  CHECK(g.has_edge(0, 1));
  CHECK(g.has_edge(1, 0));
  CHECK(!g.has_edge(0, 2));
  CHECK(g.degree(0) == 1);
  CHECK(g.degree(1) == 2);
  std::vector<std::pair<int, int>> want = {{0, 1}, {1, 2}, {2, 3}};
  CHECK(g.edges() == want);

  CHECK_THROWS_AS(from_edge_list(0, {}), std::invalid_argument);
  CHECK_THROWS_AS(from_edge_list(65, {}), std::invalid_argument);
  CHECK_THROWS_AS(from_edge_list(3, {{0, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(from_edge_list(3, {{1, 1}}), std::invalid_argument);
}

TEST_CASE("bfs distances and connectivity") {
  Graph path = from_edge_list(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
  std::vector<int> d = bfs_distances(path, 0);
  CHECK(d == std::vector<int>{0, 1, 2, 3, 4});
  d = bfs_distances(path, 2);
  CHECK(d == std::vector<int>{2, 1, 0, 1, 2});
  CHECK(is_connected(path));

  Graph split = from_edge_list(4, {{0, 1}, {2, 3}});
  d = bfs_distances(split, 0);
  CHECK(d[0] == 0);
  CHECK(d[1] == 1);
  CHECK(d[2] == Graph::unreachable);
  CHECK(d[3] == Graph::unreachable);
  CHECK(!is_connected(split));
  CHECK(!ecc_profile(split).connected);

  Graph one(1);
  CHECK(is_connected(one));
  CHECK(ecc_profile(one).ecc == std::vector<int>{0});
}

TEST_CASE("eccentricity profile anchors") {
  Graph p5 = from_edge_list(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
  EccProfile ep = ecc_profile(p5);
  CHECK(ep.connected);
  CHECK(ep.ecc == std::vector<int>{4, 3, 2, 3, 4});
  CHECK(ep.radius == 2);
  CHECK(ep.diameter == 4);

  Graph c6 = from_edge_list(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}});
  ep = ecc_profile(c6);
  CHECK(ep.radius == 3);
  CHECK(ep.diameter == 3);
  CHECK(std::all_of(ep.ecc.begin(), ep.ecc.end(), [](int e) { return e == 3; }));

  Graph k4 = from_edge_list(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  ep = ecc_profile(k4);
  CHECK(ep.radius == 1);
  CHECK(ep.diameter == 1);
}

TEST_CASE("diametric path endpoints and length") {
  Graph p5 = from_edge_list(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
  std::vector<int> path = diametric_path(p5);
  CHECK(path.front() == 0);
  CHECK(path.back() == 4);
  CHECK(path.size() == 5);

  // star: diameter 2, deterministic tie-break picks smallest leaves
  Graph star = from_edge_list(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
  path = diametric_path(star);
  CHECK(path.size() == 3);
  CHECK(path == std::vector<int>{1, 0, 2});

  // consecutive vertices must actually be adjacent
  Graph c6 = from_edge_list(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}});
  path = diametric_path(c6);
  CHECK(static_cast<int>(path.size()) == 4);
  for (size_t i = 0; i + 1 < path.size(); ++i) CHECK(c6.has_edge(path[i], path[i + 1]));

  Graph split = from_edge_list(4, {{0, 1}, {2, 3}});
  CHECK_THROWS_AS(diametric_path(split), std::invalid_argument);
}

TEST_CASE("graph6 anchors") {
  Graph k3 = from_edge_list(3, {{0, 1}, {0, 2}, {1, 2}});
  CHECK(graph6_encode(k3) == "Bw");
  Graph one(1);
  CHECK(graph6_encode(one) == "@");
  Graph p4 = from_edge_list(4, {{0, 1}, {1, 2}, {2, 3}});
  CHECK(graph6_encode(p4) == "Ch");

  Graph g = graph6_decode("Bw");
  CHECK(g.n == 3);
  CHECK(g.edge_count() == 3);
  CHECK(graph6_decode("C~").edge_count() == 6);  // K_4, no padding bits at n=4
}

TEST_CASE("graph6 decode rejects malformed input") {
  CHECK_THROWS_AS(graph6_decode(""), std::invalid_argument);
  CHECK_THROWS_AS(graph6_decode("B"), std::invalid_argument);    // payload too short
  CHECK_THROWS_AS(graph6_decode("Bwx"), std::invalid_argument);  // payload too long
  CHECK_THROWS_AS(graph6_decode("B\x1f"), std::invalid_argument);       // byte below '?'
  CHECK_THROWS_AS(graph6_decode(">>graph6<<Bw"), std::invalid_argument);  // the CLI strips this, not the codec
  CHECK_THROWS_AS(graph6_decode("B~"), std::invalid_argument);   // nonzero padding bits
  CHECK_THROWS_AS(graph6_decode("~??B"), std::invalid_argument);  // long header, missing payload
  CHECK_THROWS_AS(graph6_decode("~?~?"), std::invalid_argument);  // long header, n > 64
}

namespace {

struct RoundTrip final : SweepAccumulator {
  long long seen = 0;
  bool ok = true;
  std::unique_ptr<SweepAccumulator> fork() const override { return std::make_unique<RoundTrip>(); }
  void see(const Graph& g) override {
    ++seen;
    Graph back = graph6_decode(graph6_encode(g));
    if (back.n != g.n || !std::equal(back.adj.begin(), back.adj.end(), g.adj.begin())) ok = false;
  }
  void merge(SweepAccumulator& chunk) override {
    auto& c = static_cast<RoundTrip&>(chunk);
    seen += c.seen;
    ok = ok && c.ok;
  }
};

}  // namespace

TEST_CASE("graph6 round trip over all connected graphs up to n=5") {
  RoundTrip acc;
  for (int n = 1; n <= 5; ++n) sweep_connected(n, acc);
  CHECK(acc.ok);
  CHECK(acc.seen == 1 + 1 + 4 + 38 + 728);
}

TEST_CASE("graph6 round trip on 63 and 64 vertices uses the long header") {
  for (int n : {62, 63, 64}) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v) edges.push_back({v - 1, v});
    Graph g = from_edge_list(n, edges);
    std::string code = graph6_encode(g);
    if (n <= 62) CHECK(code[0] != '~');
    if (n > 62) CHECK(code[0] == '~');
    Graph back = graph6_decode(code);
    CHECK(back.n == n);
    CHECK(back.edge_count() == n - 1);
    CHECK(std::equal(back.adj.begin(), back.adj.end(), g.adj.begin()));
  }
}

TEST_CASE("canonical code is invariant under relabeling") {
  // P_4 under a few permutations
  Graph a = from_edge_list(4, {{0, 1}, {1, 2}, {2, 3}});
  Graph b = from_edge_list(4, {{2, 0}, {0, 3}, {3, 1}});  // relabeled path
  CHECK(canonical_code(a) == canonical_code(b));
  CHECK(canonical_graph6(a) == canonical_graph6(b));

  // C_5 three ways
  Graph c1 = from_edge_list(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
  Graph c2 = from_edge_list(5, {{0, 2}, {2, 4}, {4, 1}, {1, 3}, {3, 0}});
  CHECK(canonical_code(c1) == canonical_code(c2));
}

TEST_CASE("canonical code separates K33 from the prism") {
  // both 3-regular on 6 vertices with 9 edges, not isomorphic
  Graph k33 = from_edge_list(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}});
  Graph prism = from_edge_list(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}, {1, 4}, {2, 5}});
  CHECK(k33.edge_count() == prism.edge_count());
  CHECK(canonical_code(k33) != canonical_code(prism));
}

TEST_CASE("canonical code minimizes over labelings") {
  Graph g = from_edge_list(5, {{0, 3}, {3, 1}, {1, 4}, {4, 2}});
  CHECK(canonical_code(g) <= identity_code(g));
  Graph form = canonical_form(g);
  CHECK(identity_code(form) == canonical_code(g));
  CHECK(graph6_encode(form) == canonical_graph6(g));
}

namespace {

struct IsoClasses final : SweepAccumulator {
  std::set<std::uint64_t> codes;
  std::unique_ptr<SweepAccumulator> fork() const override { return std::make_unique<IsoClasses>(); }
  void see(const Graph& g) override { codes.insert(canonical_code(g)); }
  void merge(SweepAccumulator& chunk) override {
    auto& c = static_cast<IsoClasses&>(chunk);
    codes.insert(c.codes.begin(), c.codes.end());
  }
};

}  // namespace

TEST_CASE("isomorphism class counts for small connected graphs") {
  // 2, 6, 21 connected graphs on 3, 4, 5 vertices up to isomorphism
  int want[] = {2, 6, 21};
  for (int n = 3; n <= 5; ++n) {
    IsoClasses acc;
    sweep_connected(n, acc);
    CHECK(static_cast<int>(acc.codes.size()) == want[n - 3]);
  }
}
