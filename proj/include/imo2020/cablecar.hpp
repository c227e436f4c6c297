#pragma once

// IMO 2020 Problem 4: n^2 stations, two companies with k cable cars each
// (distinct starts, distinct finishes, order-preserving). The smallest k
// guaranteeing a pair of stations linked by both companies is n^2 - n + 1.
//
// Since all starts are distinct, "take the car starting here" is a function,
// so the stations reachable from s form a single ascending chain. The station
// graph (one undirected edge per car) is a forest, and two stations are linked
// iff they share a component; both facts are verified by tests, not assumed.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "imo2020/common.hpp"

namespace imo::cablecar {

using StationPair = std::pair<int, int>;  // (lo, hi), lo < hi

struct CableCarConfig {
  int n = 0;                          // stations are 0 .. n^2-1
  std::vector<StationPair> cars;      // (start, finish)
};

struct StationGraph {
  int vertex_count = 0;
  std::vector<StationPair> edges;
  std::vector<int> component_of;      // station -> component id (min station)
  int component_count = 0;
};

struct Verdict {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

inline Verdict validate_config(const CableCarConfig& c) {
  Verdict v;
  if (c.n <= 1) {
    v.violations.push_back("n must be > 1");
    return v;
  }
  int stations = c.n * c.n;
  std::set<int> starts, finishes;
  for (auto [s, f] : c.cars) {
    if (s < 0 || f >= stations) {
      v.violations.push_back("station id out of range");
      return v;
    }
    if (s >= f) v.violations.push_back("start < finish fails for car (" +
                                       std::to_string(s) + "," + std::to_string(f) + ")");
    if (!starts.insert(s).second)
      v.violations.push_back("duplicate start " + std::to_string(s));
    if (!finishes.insert(f).second)
      v.violations.push_back("duplicate finish " + std::to_string(f));
  }
  // Sorting by start must also sort by finish.
  std::vector<StationPair> sorted = c.cars;
  std::sort(sorted.begin(), sorted.end());
  for (size_t i = 1; i < sorted.size(); i++)
    if (sorted[i - 1].second >= sorted[i].second) {
      v.violations.push_back("order-preservation fails between cars starting at " +
                             std::to_string(sorted[i - 1].first) + " and " +
                             std::to_string(sorted[i].first));
      break;
    }
  return v;
}

inline void require_valid(const CableCarConfig& c) {
  Verdict v = validate_config(c);
  if (!v.ok()) throw validation_error("invalid config: " + v.violations.front());
}

// All pairs (s, t), s < t, with t reachable from s by a chain of cars.
// Distinct starts make the successor map a function, so each station has a
// unique forward chain.
inline std::set<StationPair> linked_pairs(const CableCarConfig& c) {
  require_valid(c);
  std::map<int, int> next;  // start -> finish
  for (auto [s, f] : c.cars) next[s] = f;
  std::set<StationPair> out;
  for (auto [s, f] : c.cars) {
    int t = f;
    out.insert({s, t});
    auto it = next.find(t);
    while (it != next.end()) {
      t = it->second;
      out.insert({s, t});
      it = next.find(t);
    }
  }
  return out;
}

// One undirected edge per car; asserts acyclicity (the order-preservation
// argument makes the graph a forest).
inline StationGraph station_graph(const CableCarConfig& c) {
  require_valid(c);
  StationGraph g;
  g.vertex_count = c.n * c.n;
  g.edges = c.cars;

  std::vector<int> parent(g.vertex_count);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto [s, f] : c.cars) {
    int a = find(s), b = find(f);
    if (a == b) throw contract_violation("station graph contains a cycle");
    parent[std::max(a, b)] = std::min(a, b);
  }
  g.component_of.resize(g.vertex_count);
  std::set<int> roots;
  for (int v = 0; v < g.vertex_count; v++) {
    g.component_of[v] = find(v);
    roots.insert(g.component_of[v]);
  }
  g.component_count = static_cast<int>(roots.size());
  return g;
}

// Company A chains i, i+n, ..., i+n^2-n for each residue i; company B chains
// the consecutive block ni, ni+1, ..., ni+n-1. Each gets n^2-n cars and no
// station pair is linked by both.
inline std::pair<CableCarConfig, CableCarConfig> extremal_construction(int n) {
  if (n <= 1) throw validation_error("extremal_construction requires n > 1");
  CableCarConfig a{n, {}}, b{n, {}};
  for (int i = 0; i < n; i++)
    for (int j = 0; j + 1 < n; j++) {
      a.cars.push_back({i + j * n, i + (j + 1) * n});
      b.cars.push_back({n * i + j, n * i + j + 1});
    }
  return {a, b};
}

// Keys each station on its (A-component, B-component) pair; a duplicated key
// is two stations linked by both companies. Returns the lexicographically
// smallest duplicated pair, or nullopt.
inline std::optional<StationPair> find_common_linked(const CableCarConfig& a,
                                                     const CableCarConfig& b) {
  if (a.n != b.n) throw validation_error("configs have different n");
  StationGraph ga = station_graph(a);
  StationGraph gb = station_graph(b);
  std::map<std::pair<int, int>, int> first_with_key;  // key -> lowest station
  std::optional<StationPair> best;
  for (int v = 0; v < ga.vertex_count; v++) {
    std::pair<int, int> key{ga.component_of[v], gb.component_of[v]};
    auto [it, inserted] = first_with_key.try_emplace(key, v);
    if (!inserted) {
      StationPair cand{it->second, v};
      if (!best || cand < *best) best = cand;
    }
  }
  return best;
}

// All valid k-car configs at n = 2 (6 candidate cars on 4 stations).
inline std::vector<CableCarConfig> enumerate_configs_n2(int k) {
  std::vector<StationPair> all;
  for (int s = 0; s < 4; s++)
    for (int f = s + 1; f < 4; f++) all.push_back({s, f});
  std::vector<CableCarConfig> out;
  int m = static_cast<int>(all.size());
  for (std::uint32_t mask = 0; mask < (1u << m); mask++) {
    if (std::popcount(mask) != static_cast<unsigned>(k)) continue;
    CableCarConfig c{2, {}};
    for (int i = 0; i < m; i++)
      if ((mask >> i) & 1u) c.cars.push_back(all[i]);
    if (validate_config(c).ok()) out.push_back(std::move(c));
  }
  return out;
}

// Smallest k such that every pair of valid k-car configs shares a commonly
// linked station pair. Exhaustive, so restricted to n = 2.
inline int brute_force_min_k(int n) {
  if (n != 2) throw validation_error("brute_force_min_k only supports n = 2");
  for (int k = 1; k <= 3; k++) {
    auto configs = enumerate_configs_n2(k);
    if (configs.empty()) break;
    bool all_share = true;
    for (size_t i = 0; i < configs.size() && all_share; i++)
      for (size_t j = 0; j < configs.size() && all_share; j++)
        if (!find_common_linked(configs[i], configs[j])) all_share = false;
    if (all_share) return k;
  }
  throw contract_violation("no k up to n^2-n+1 suffices; theorem violated");
}

// Seeded random valid config: sample k distinct starts and k distinct
// finishes, sort both, pair them up, reject if any start >= finish.
inline CableCarConfig random_config(int n, int k, std::uint64_t seed) {
  if (n <= 1 || k < 1 || k > n * n - 1)
    throw validation_error("random_config: bad n or k");
  std::mt19937_64 rng(seed);
  int stations = n * n;
  std::vector<int> ids(stations);
  std::iota(ids.begin(), ids.end(), 0);
  for (int attempt = 0; attempt < 200000; attempt++) {
    auto sample_k = [&]() {
      std::vector<int> pool = ids;
      std::shuffle(pool.begin(), pool.end(), rng);
      pool.resize(k);
      std::sort(pool.begin(), pool.end());
      return pool;
    };
    std::vector<int> starts = sample_k();
    std::vector<int> finishes = sample_k();
    bool ok = true;
    for (int i = 0; i < k; i++)
      if (starts[i] >= finishes[i]) { ok = false; break; }
    if (!ok) continue;
    CableCarConfig c{n, {}};
    for (int i = 0; i < k; i++) c.cars.push_back({starts[i], finishes[i]});
    return c;
  }
  throw contract_violation("random_config: rejection budget exhausted");
}

}  // namespace imo::cablecar
