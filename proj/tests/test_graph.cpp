#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>

#include "doctest.h"
#include "netcoord/graph.hpp"

using namespace netcoord;

namespace {

// Independent degree-sum oracle: count adjacency entries one by one.
std::int64_t degree_sum(const Graph& g) {
  std::int64_t total = 0;
  for (int v = 0; v < g.vertex_count(); ++v) total += std::int64_t(g.neighbors(v).size());
  return total;
}

void check_simple_symmetric(const Graph& g) {
  for (int v = 0; v < g.vertex_count(); ++v) {
    const auto& nbrs = g.neighbors(v);
    CHECK(std::is_sorted(nbrs.begin(), nbrs.end()));
    CHECK(std::adjacent_find(nbrs.begin(), nbrs.end()) == nbrs.end());
    for (int u : nbrs) {
      CHECK(u != v);
      const auto& back = g.neighbors(u);
      CHECK(std::binary_search(back.begin(), back.end(), v));
    }
  }
  CHECK(g.ordered_edge_count() == degree_sum(g));
}

}  // namespace

TEST_CASE("cycle generator") {
  Graph g3 = make_cycle(3);
  CHECK(g3.vertex_count() == 3);
  CHECK(g3.ordered_edge_count() == 6);
  check_simple_symmetric(g3);

  Graph g15 = make_cycle(15);
  for (int i = 0; i < 15; ++i) {
    std::vector<int> expected{(i + 14) % 15, (i + 1) % 15};
    std::sort(expected.begin(), expected.end());
    CHECK(g15.neighbors(i) == expected);
  }

  Graph g105 = make_cycle(105);
  check_simple_symmetric(g105);
  for (int v = 0; v < 105; ++v) CHECK(g105.degree(v) == 2);
  CHECK(g105.ordered_edge_count() == 210);
  CHECK(components_after_removal(g105, {}).size() == 1);

  CHECK_THROWS_AS(make_cycle(2), std::invalid_argument);
}

TEST_CASE("torus generator") {
  Graph g = make_torus(3, 3);
  CHECK(g.vertex_count() == 9);
  for (int v = 0; v < 9; ++v) CHECK(g.degree(v) == 4);
  CHECK(g.ordered_edge_count() == 36);
  check_simple_symmetric(g);

  Graph g66 = make_torus(6, 6);
  CHECK(g66.ordered_edge_count() == 144);
  check_simple_symmetric(g66);

  Graph g34 = make_torus(3, 4);
  std::vector<int> expected{1, 2, 3, 9};
  CHECK(g34.neighbors(0) == expected);

  CHECK_THROWS_AS(make_torus(2, 5), std::invalid_argument);
  CHECK_THROWS_AS(make_torus(5, 2), std::invalid_argument);
}

TEST_CASE("binary tree generator") {
  Graph g0 = make_binary_tree(0);
  CHECK(g0.vertex_count() == 1);
  CHECK(g0.edges().empty());

  Graph g2 = make_binary_tree(2);
  CHECK(g2.vertex_count() == 7);
  CHECK(g2.edges().size() == 6);
  CHECK(g2.degree(0) == 2);
  CHECK(g2.degree(1) == 3);
  CHECK(g2.degree(3) == 1);
  check_simple_symmetric(g2);

  CHECK(make_binary_tree(10).vertex_count() == 2047);
  CHECK_THROWS_AS(make_binary_tree(-1), std::invalid_argument);
  CHECK_THROWS_AS(make_binary_tree(40), std::invalid_argument);
}

TEST_CASE("erdos-renyi generator") {
  Graph a = make_erdos_renyi(200, 3.0, 7);
  Graph b = make_erdos_renyi(200, 3.0, 7);
  CHECK(a.edges() == b.edges());
  check_simple_symmetric(a);

  Graph c = make_erdos_renyi(200, 3.0, 8);
  CHECK(a.edges() != c.edges());

  // Mean degree against the binomial law: the edge total is
  // Bin(n(n-1)/2, d/n), so the mean degree has expectation d(1-1/n).
  int n = 2000;
  double d = 3.0;
  Graph big = make_erdos_renyi(n, d, 42);
  double mean_degree = double(big.ordered_edge_count()) / double(n);
  double expectation = d * (1.0 - 1.0 / double(n));
  double pairs = 0.5 * double(n) * double(n - 1);
  double p = d / double(n);
  double sd = 2.0 * std::sqrt(pairs * p * (1.0 - p)) / double(n);
  CHECK(std::abs(mean_degree - expectation) <= 3.0 * sd);

  // A two-vertex graph has one candidate pair with inclusion probability d/2.
  int edges = 0;
  int reps = 10000;
  double d2 = 0.5;
  for (int s = 0; s < reps; ++s) edges += int(make_erdos_renyi(2, d2, std::uint64_t(s)).edges().size());
  double freq = double(edges) / double(reps);
  double se = std::sqrt(0.25 * 0.75 / double(reps));
  CHECK(std::abs(freq - d2 / 2.0) <= 4.0 * se);

  CHECK_THROWS_AS(make_erdos_renyi(10, 10.0, 1), std::invalid_argument);
  CHECK_THROWS_AS(make_erdos_renyi(10, 0.0, 1), std::invalid_argument);
  CHECK_THROWS_AS(make_erdos_renyi(1, 0.5, 1), std::invalid_argument);
}

TEST_CASE("graph construction rejects malformed edges") {
  CHECK_THROWS_AS(Graph(3, {{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {{0, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {{0, 1}, {0, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {{1, 0}}), std::invalid_argument);
}

TEST_CASE("ball") {
  Graph g = make_cycle(15);
  CHECK(ball(g, 0, 0) == VertexSet{0});
  CHECK(ball(g, 0, 2) == VertexSet{0, 1, 2, 13, 14});

  Graph t = make_binary_tree(3);
  CHECK(ball(t, 0, 1) == VertexSet{0, 1, 2});

  CHECK_THROWS_AS(ball(g, 99, 1), std::invalid_argument);
  CHECK_THROWS_AS(ball(g, 0, -1), std::invalid_argument);

  // Monotone in the radius, and saturates at the whole component.
  Graph er = make_erdos_renyi(60, 2.5, 3);
  for (int v : {0, 7, 33}) {
    VertexSet prev = ball(er, v, 0);
    for (int r = 1; r <= 8; ++r) {
      VertexSet cur = ball(er, v, r);
      CHECK(std::includes(cur.begin(), cur.end(), prev.begin(), prev.end()));
      prev = cur;
    }
    std::vector<int> dist = bfs_distances(er, v);
    VertexSet component;
    for (int u = 0; u < er.vertex_count(); ++u)
      if (dist[u] >= 0) component.push_back(u);
    CHECK(ball(er, v, er.vertex_count()) == component);
  }
}

TEST_CASE("set_radius") {
  Graph g = make_cycle(30);
  CHECK(set_radius(g, {5}).radius == 0);
  CHECK(set_radius(g, {5}).center == 5);

  SetRadius sr = set_radius(g, {1, 2, 3, 4, 5});
  CHECK(sr.radius == 2);
  CHECK(sr.center == 3);

  // 3x3 block in a 9x9 torus, checked against brute-force all-pairs distances.
  Graph t = make_torus(9, 9);
  VertexSet block;
  for (int y = 0; y < 3; ++y)
    for (int x = 0; x < 3; ++x) block.push_back(y * 9 + x);
  std::sort(block.begin(), block.end());
  int best_radius = 1 << 20;
  int best_center = -1;
  for (int c : block) {
    std::vector<int> dist = bfs_distances(t, c);
    int radius = 0;
    for (int v : block) radius = std::max(radius, dist[v]);
    if (radius < best_radius) {
      best_radius = radius;
      best_center = c;
    }
  }
  SetRadius got = set_radius(t, block);
  CHECK(got.radius == best_radius);
  CHECK(got.center == best_center);
  CHECK(got.radius == 2);
  CHECK(got.center == 10);  // middle cell (1,1)

  CHECK_THROWS_AS(set_radius(g, {}), std::invalid_argument);
}

TEST_CASE("boundary and components") {
  Graph g = make_cycle(15);
  VertexSet all(15);
  for (int i = 0; i < 15; ++i) all[i] = i;
  CHECK(boundary(g, all).empty());

  VertexSet f{0, 1, 2, 3, 4};
  EdgeSet cut = boundary(g, f);
  CHECK(cut == EdgeSet{{0, 14}, {4, 5}});
  CHECK(ordered_boundary_count(g, f) == 2);

  EdgeSet d{{0, 14}, {4, 5}, {9, 10}};
  auto comps = components_after_removal(g, d);
  REQUIRE(comps.size() == 3);
  CHECK(comps[0] == VertexSet{0, 1, 2, 3, 4});
  CHECK(comps[1] == VertexSet{5, 6, 7, 8, 9});
  CHECK(comps[2] == VertexSet{10, 11, 12, 13, 14});

  CHECK_THROWS_AS(components_after_removal(g, {{0, 7}}), std::invalid_argument);
}

TEST_CASE("components form a partition with connected parts") {
  Graph g = make_erdos_renyi(80, 3.0, 11);
  Rng rng(5);
  EdgeSet removed;
  for (const Edge& e : g.edges())
    if (rng.next_unit() < 0.3) removed.push_back(e);
  auto comps = components_after_removal(g, removed);

  std::vector<int> owner(80, -1);
  std::size_t covered = 0;
  for (std::size_t k = 0; k < comps.size(); ++k)
    for (int v : comps[k]) {
      CHECK(owner[v] == -1);
      owner[v] = int(k);
      ++covered;
    }
  CHECK(covered == 80);

  // No surviving edge may cross between components.
  std::set<Edge> gone(removed.begin(), removed.end());
  for (const Edge& e : g.edges())
    if (!gone.count(e)) CHECK(owner[e.first] == owner[e.second]);
}

TEST_CASE("ordered boundary equals per-vertex outside-neighbor sum") {
  Graph g = make_erdos_renyi(50, 4.0, 2);
  Rng rng(9);
  VertexSet f;
  for (int v = 0; v < 50; ++v)
    if (rng.next_unit() < 0.4) f.push_back(v);
  std::int64_t expected = 0;
  for (int v : f) {
    for (int u : g.neighbors(v))
      if (!std::binary_search(f.begin(), f.end(), u)) ++expected;
  }
  CHECK(ordered_boundary_count(g, f) == expected);
  CHECK(std::int64_t(boundary(g, f).size()) == expected);
}

TEST_CASE("graph json round trip") {
  Graph g = make_erdos_renyi(40, 3.0, 13);
  FamilyTag tag;
  tag.kind = "er";
  tag.n = 40;
  tag.expected_degree = 3.0;
  tag.seed = 13;
  std::string path = "test_graph_roundtrip.json";
  save_graph(g, tag, path);
  LoadedGraph back = load_graph(path);
  CHECK(back.graph.edges() == g.edges());
  CHECK(back.graph.vertex_count() == 40);
  CHECK(back.family.kind == "er");
  CHECK(back.family.expected_degree == 3.0);
  std::remove(path.c_str());

  CHECK_THROWS_AS(load_graph("does_not_exist.json"), std::invalid_argument);
}
