#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>

#include "imo2020/cablecar.hpp"

using namespace imo::cablecar;

namespace {

// Same-component pairs of the station graph, the Lemma's other route.
std::set<StationPair> component_pairs(const StationGraph& g) {
  std::set<StationPair> out;
  for (int u = 0; u < g.vertex_count; u++)
    for (int v = u + 1; v < g.vertex_count; v++)
      if (g.component_of[u] == g.component_of[v]) out.insert({u, v});
  return out;
}

// Simple path between u and v in a forest, by DFS over the edge list.
std::vector<int> forest_path(const StationGraph& g, int u, int v) {
  std::vector<std::vector<int>> adj(g.vertex_count);
  for (auto [a, b] : g.edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<int> parent(g.vertex_count, -2);
  std::vector<int> stack{u};
  parent[u] = -1;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (int y : adj[x])
      if (parent[y] == -2) {
        parent[y] = x;
        stack.push_back(y);
      }
  }
  std::vector<int> path;
  for (int x = v; x != -1; x = parent[x]) path.push_back(x);
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace

TEST_CASE("config validation") {
  REQUIRE(validate_config({2, {{0, 2}, {1, 3}}}).ok());
  REQUIRE_FALSE(validate_config({2, {{0, 2}, {1, 1}}}).ok());  // start < finish
  REQUIRE_FALSE(validate_config({2, {{0, 3}, {1, 2}}}).ok());  // order-preservation
  REQUIRE_FALSE(validate_config({2, {{0, 2}, {0, 3}}}).ok());  // duplicate start
  REQUIRE_FALSE(validate_config({2, {{0, 3}, {1, 3}}}).ok());  // duplicate finish
  REQUIRE_FALSE(validate_config({1, {}}).ok());                // n too small
}

TEST_CASE("linked pairs") {
  SECTION("single car") {
    REQUIRE(linked_pairs({2, {{0, 1}}}) == std::set<StationPair>{{0, 1}});
  }
  SECTION("two-car chain is transitively closed") {
    REQUIRE(linked_pairs({2, {{0, 1}, {1, 2}}}) ==
            std::set<StationPair>{{0, 1}, {1, 2}, {0, 2}});
  }
  SECTION("extremal A-side at n=4 links all residue-class pairs") {
    auto [a, b] = extremal_construction(4);
    auto pairs = linked_pairs(a);
    REQUIRE(pairs.size() == 24);  // 4 * C(4,2)
    for (auto [lo, hi] : pairs) REQUIRE((hi - lo) % 4 == 0);
  }
  SECTION("invalid config rejected") {
    REQUIRE_THROWS_AS(linked_pairs({2, {{0, 3}, {1, 2}}}), imo::validation_error);
  }
}

TEST_CASE("station graph") {
  SECTION("two disjoint cars") {
    StationGraph g = station_graph({2, {{0, 2}, {1, 3}}});
    REQUIRE(g.vertex_count == 4);
    REQUIRE(g.component_count == 2);
  }
  SECTION("chain is one component") {
    StationGraph g = station_graph({2, {{0, 1}, {1, 2}, {2, 3}}});
    REQUIRE(g.component_count == 1);
  }
  SECTION("extremal A-side at n=3: three paths of three stations") {
    auto [a, b] = extremal_construction(3);
    StationGraph g = station_graph(a);
    REQUIRE(g.component_count == 3);
    REQUIRE(g.edges.size() == 6);
  }
  SECTION("component count is n^2 - k on random valid configs") {
    std::uint64_t seed = 1000;
    for (int n : {2, 3, 4, 5})
      for (int k = 1; k <= n * n - n + 1; k += 2) {
        CableCarConfig c = random_config(n, k, seed++);
        REQUIRE(validate_config(c).ok());
        REQUIRE(station_graph(c).component_count == n * n - k);
      }
  }
}

TEST_CASE("lemma: linked iff same component") {
  std::uint64_t seed = 7;
  int checked = 0;
  for (int n : {2, 3, 4, 5})
    for (int k = 1; k <= n * n - n + 1; k++)
      for (int rep = 0; rep < 10; rep++) {
        CableCarConfig c = random_config(n, k, seed++);
        REQUIRE(linked_pairs(c) == component_pairs(station_graph(c)));
        checked++;
      }
  REQUIRE(checked > 100);
}

TEST_CASE("monotone path property") {
  // every simple path between i < j visits strictly increasing labels
  std::uint64_t seed = 99;
  for (int rep = 0; rep < 50; rep++) {
    CableCarConfig c = random_config(4, 10, seed++);
    StationGraph g = station_graph(c);
    for (auto [u, v] : component_pairs(g)) {
      auto path = forest_path(g, u, v);
      REQUIRE(path.size() >= 2);
      for (size_t i = 1; i < path.size(); i++) REQUIRE(path[i - 1] < path[i]);
    }
  }
}

TEST_CASE("extremal construction") {
  SECTION("n=2 matches the explicit instance") {
    auto [a, b] = extremal_construction(2);
    REQUIRE(a.cars == std::vector<StationPair>{{0, 2}, {1, 3}});
    std::vector<StationPair> bs = b.cars;
    std::sort(bs.begin(), bs.end());
    REQUIRE(bs == std::vector<StationPair>{{0, 1}, {2, 3}});
    REQUIRE_FALSE(find_common_linked(a, b).has_value());
  }
  SECTION("car counts, validity, disjoint linked sets up to n=30") {
    for (int n = 2; n <= 30; n++) {
      auto [a, b] = extremal_construction(n);
      REQUIRE(static_cast<int>(a.cars.size()) == n * n - n);
      REQUIRE(static_cast<int>(b.cars.size()) == n * n - n);
      REQUIRE(validate_config(a).ok());
      REQUIRE(validate_config(b).ok());
      auto la = linked_pairs(a);
      auto lb = linked_pairs(b);
      std::vector<StationPair> common;
      std::set_intersection(la.begin(), la.end(), lb.begin(), lb.end(),
                            std::back_inserter(common));
      REQUIRE(common.empty());
      REQUIRE_FALSE(find_common_linked(a, b).has_value());
    }
  }
  SECTION("n <= 1 rejected") {
    REQUIRE_THROWS_AS(extremal_construction(1), imo::validation_error);
  }
}

TEST_CASE("find_common_linked") {
  SECTION("chains at n=2, k=3 share a pair") {
    CableCarConfig chain{2, {{0, 1}, {1, 2}, {2, 3}}};
    auto p = find_common_linked(chain, chain);
    REQUIRE(p);
    REQUIRE(*p == StationPair{0, 1});  // lexicographically smallest
  }
  SECTION("returned pair is linked by both") {
    std::uint64_t seed = 31;
    for (int rep = 0; rep < 100; rep++) {
      CableCarConfig a = random_config(3, 7, seed++);
      CableCarConfig b = random_config(3, 7, seed++);
      auto p = find_common_linked(a, b);
      REQUIRE(p);  // k = n^2-n+1 guarantees a common pair
      REQUIRE(linked_pairs(a).count(*p) == 1);
      REQUIRE(linked_pairs(b).count(*p) == 1);
    }
  }
  SECTION("mismatched n rejected") {
    REQUIRE_THROWS_AS(
        find_common_linked({2, {{0, 1}}}, {3, {{0, 1}}}), imo::validation_error);
  }
}

TEST_CASE("brute force minimum k at n=2") {
  REQUIRE(brute_force_min_k(2) == 3);
  REQUIRE_THROWS_AS(brute_force_min_k(3), imo::validation_error);

  SECTION("k=2 admits a witness pair without common links") {
    auto [a, b] = extremal_construction(2);
    REQUIRE_FALSE(find_common_linked(a, b).has_value());
  }
  SECTION("the chain is the only valid 3-car config on 4 stations") {
    auto configs = enumerate_configs_n2(3);
    REQUIRE(configs.size() == 1);
    std::vector<StationPair> cars = configs.front().cars;
    std::sort(cars.begin(), cars.end());
    REQUIRE(cars == std::vector<StationPair>{{0, 1}, {1, 2}, {2, 3}});
  }
}
