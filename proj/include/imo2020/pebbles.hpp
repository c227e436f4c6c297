#pragma once

// IMO 2020 Problem 3: 4n pebbles of weights 1..4n, four pebbles of each of n
// colors, can always be split into two piles of equal weight with two pebbles
// of each color per pile.
//
// The constructive solution pairs weight w with 4n+1-w, views each pair as an
// edge between its two colors (a 4-regular multigraph on the colors), walks an
// Eulerian circuit per component, and alternately 2-colors its edges. Edges of
// one circuit color form one pile.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "imo2020/common.hpp"

namespace imo::pebbles {

struct PebbleColoring {
  int n = 0;                  // number of colors; 4n pebbles total
  std::vector<int> color_of;  // color_of[i] = color of pebble of weight i+1
};

struct Edge {
  int u = 0;  // color endpoints; u == v is a loop
  int v = 0;
  int pair_id = 0;  // pair (pair_id+1, 4n - pair_id)
};

struct PairMultigraph {
  int vertex_count = 0;
  std::vector<Edge> edges;  // exactly 2n, indexed by pair_id
};

struct Partition {
  std::vector<int> pile_a;  // pebble weights, sorted ascending
  std::vector<int> pile_b;
};

struct Verdict {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

inline Verdict validate_coloring(const PebbleColoring& c) {
  Verdict v;
  if (c.n < 1) {
    v.violations.push_back("n must be >= 1");
    return v;
  }
  if (static_cast<int>(c.color_of.size()) != 4 * c.n) {
    v.violations.push_back("color_of must have length 4n");
    return v;
  }
  std::vector<int> counts(c.n, 0);
  for (int col : c.color_of) {
    if (col < 0 || col >= c.n) {
      v.violations.push_back("color value out of range [0, n)");
      return v;
    }
    counts[col]++;
  }
  for (int col = 0; col < c.n; col++) {
    if (counts[col] != 4) {
      v.violations.push_back("color " + std::to_string(col) +
                             " appears " + std::to_string(counts[col]) +
                             " times, expected 4");
    }
  }
  return v;
}

inline void require_valid(const PebbleColoring& c) {
  Verdict v = validate_coloring(c);
  if (!v.ok()) throw validation_error("invalid coloring: " + v.violations.front());
}

// One edge per pair (w, 4n+1-w), w = 1..2n, joining the pebbles' colors.
inline PairMultigraph build_pair_multigraph(const PebbleColoring& c) {
  require_valid(c);
  PairMultigraph g;
  g.vertex_count = c.n;
  g.edges.reserve(2 * c.n);
  for (int w = 1; w <= 2 * c.n; w++) {
    int mate = 4 * c.n + 1 - w;
    g.edges.push_back({c.color_of[w - 1], c.color_of[mate - 1], w - 1});
  }
  return g;
}

// Hierholzer with edge splicing. Loops count as degree 2 and are consumed as
// single circuit steps. Deterministic: start at the lowest vertex in the
// component, always take the unused incident edge with the lowest id.
// Returns the circuit as a sequence of edge ids.
inline std::vector<int> eulerian_circuit(const PairMultigraph& g,
                                         const std::vector<int>& component_vertices) {
  if (component_vertices.empty())
    throw contract_violation("eulerian_circuit: empty vertex set");

  std::vector<bool> in_comp(g.vertex_count, false);
  for (int v : component_vertices) in_comp[v] = true;

  // Incidence lists sorted by edge id (edges are already id-ordered).
  std::vector<std::vector<int>> inc(g.vertex_count);
  std::vector<int> degree(g.vertex_count, 0);
  for (int id = 0; id < static_cast<int>(g.edges.size()); id++) {
    const Edge& e = g.edges[id];
    if (!in_comp[e.u] && !in_comp[e.v]) continue;
    if (!in_comp[e.u] || !in_comp[e.v])
      throw contract_violation("edge crosses the given vertex set");
    inc[e.u].push_back(id);
    degree[e.u] += (e.u == e.v) ? 2 : 1;
    if (e.u != e.v) {
      inc[e.v].push_back(id);
      degree[e.v]++;
    }
  }
  for (int v : component_vertices)
    if (degree[v] % 2 != 0)
      throw contract_violation("odd-degree vertex " + std::to_string(v));

  int start = *std::min_element(component_vertices.begin(), component_vertices.end());

  // The listed vertices must induce one connected component.
  {
    std::vector<bool> reached(g.vertex_count, false);
    std::vector<int> frontier{start};
    reached[start] = true;
    while (!frontier.empty()) {
      int v = frontier.back();
      frontier.pop_back();
      for (int id : inc[v]) {
        const Edge& e = g.edges[id];
        int w = (e.u == v) ? e.v : e.u;
        if (!reached[w]) {
          reached[w] = true;
          frontier.push_back(w);
        }
      }
    }
    for (int v : component_vertices)
      if (!reached[v])
        throw contract_violation("vertex set is not a single connected component");
  }

  std::vector<bool> used(g.edges.size(), false);
  std::vector<size_t> cursor(g.vertex_count, 0);

  // Iterative Hierholzer: walk until stuck, splice sub-tours.
  std::vector<std::pair<int, int>> stack;  // (vertex, edge id taken to get here)
  std::vector<int> circuit;
  stack.push_back({start, -1});
  while (!stack.empty()) {
    int v = stack.back().first;
    size_t& cur = cursor[v];
    while (cur < inc[v].size() && used[inc[v][cur]]) cur++;
    if (cur < inc[v].size()) {
      int id = inc[v][cur];
      used[id] = true;
      const Edge& e = g.edges[id];
      int next = (e.u == v) ? e.v : e.u;
      stack.push_back({next, id});
    } else {
      if (stack.back().second >= 0) circuit.push_back(stack.back().second);
      stack.pop_back();
    }
  }
  std::reverse(circuit.begin(), circuit.end());

  size_t edge_count = 0;
  for (const Edge& e : g.edges)
    if (in_comp[e.u]) edge_count++;
  if (circuit.size() != edge_count)
    throw contract_violation("circuit missed edges of the component");
  return circuit;
}

// Connected components of the pair multigraph, as sorted vertex lists.
inline std::vector<std::vector<int>> components(const PairMultigraph& g) {
  std::vector<int> parent(g.vertex_count);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Edge& e : g.edges) {
    int a = find(e.u), b = find(e.v);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<std::vector<int>> comps(g.vertex_count);
  for (int v = 0; v < g.vertex_count; v++) comps[find(v)].push_back(v);
  std::erase_if(comps, [](const auto& c) { return c.empty(); });
  return comps;
}

namespace detail {

inline Partition partition_from_pair_sides(const PebbleColoring& c,
                                           const std::vector<int>& pair_side) {
  // pair_side[pair_id] in {0, 1}; canonical orientation puts the pair
  // containing weight 1 (pair_id 0) into pile_a.
  int flip = pair_side[0];
  Partition p;
  for (int pid = 0; pid < 2 * c.n; pid++) {
    int w = pid + 1, mate = 4 * c.n - pid;
    auto& pile = (pair_side[pid] == flip) ? p.pile_a : p.pile_b;
    pile.push_back(w);
    pile.push_back(mate);
  }
  std::sort(p.pile_a.begin(), p.pile_a.end());
  std::sort(p.pile_b.begin(), p.pile_b.end());
  return p;
}

}  // namespace detail

// Alternating 2-coloring of per-component Eulerian circuits, translated back
// to a two-pile split of the pebbles.
inline Partition partition_pebbles(const PebbleColoring& c) {
  require_valid(c);
  PairMultigraph g = build_pair_multigraph(c);
  std::vector<int> pair_side(2 * c.n, -1);
  for (const auto& comp : components(g)) {
    std::vector<int> circuit = eulerian_circuit(g, comp);
    if (circuit.size() % 2 != 0)
      throw contract_violation("component has odd edge count");
    for (size_t i = 0; i < circuit.size(); i++)
      pair_side[g.edges[circuit[i]].pair_id] = static_cast<int>(i % 2);
  }
  for (int s : pair_side)
    if (s < 0) throw contract_violation("pair left unassigned");
  return detail::partition_from_pair_sides(c, pair_side);
}

inline Verdict verify_partition(const PebbleColoring& c, const Partition& p) {
  Verdict v = validate_coloring(c);
  if (!v.ok()) return v;
  int n = c.n;
  if (static_cast<int>(p.pile_a.size()) != 2 * n)
    v.violations.push_back("pile_a size is not 2n");
  if (static_cast<int>(p.pile_b.size()) != 2 * n)
    v.violations.push_back("pile_b size is not 2n");

  std::set<int> seen;
  bool range_ok = true;
  for (const auto* pile : {&p.pile_a, &p.pile_b})
    for (int w : *pile) {
      if (w < 1 || w > 4 * n) range_ok = false;
      if (!seen.insert(w).second)
        v.violations.push_back("weight " + std::to_string(w) + " appears twice");
    }
  if (!range_ok) v.violations.push_back("weight out of range [1, 4n]");
  if (range_ok && static_cast<int>(seen.size()) != 4 * n)
    v.violations.push_back("piles do not cover {1..4n}");

  long long target = static_cast<long long>(n) * (4 * n + 1);
  auto pile_sum = [](const std::vector<int>& pile) {
    return std::accumulate(pile.begin(), pile.end(), 0LL);
  };
  if (pile_sum(p.pile_a) != target || pile_sum(p.pile_b) != target)
    v.violations.push_back("pile sums differ from n(4n+1)");

  for (const auto* pile : {&p.pile_a, &p.pile_b}) {
    std::vector<int> counts(n, 0);
    for (int w : *pile)
      if (w >= 1 && w <= 4 * n) counts[c.color_of[w - 1]]++;
    for (int col = 0; col < n; col++)
      if (counts[col] != 2) {
        v.violations.push_back("color balance fails");
        break;
      }
  }
  return v;
}

// Exhaustive oracle over pair-to-pile assignments (2^{2n} states). The theorem
// guarantees a valid partition exists; nullopt means the theorem failed.
inline std::optional<Partition> brute_force_partition(const PebbleColoring& c) {
  require_valid(c);
  if (c.n > 4) throw validation_error("brute_force_partition limited to n <= 4");
  int n = c.n;
  int pairs = 2 * n;
  for (std::uint32_t mask = 0; mask < (1u << pairs); mask++) {
    if (std::popcount(mask) != static_cast<unsigned>(n)) continue;
    if (mask & 1u) continue;  // pair 0 stays in pile_a
    std::vector<int> count_a(n, 0);
    for (int pid = 0; pid < pairs; pid++) {
      if ((mask >> pid) & 1u) continue;
      count_a[c.color_of[pid]]++;
      count_a[c.color_of[4 * n - pid - 1]]++;
    }
    if (std::all_of(count_a.begin(), count_a.end(), [](int x) { return x == 2; })) {
      std::vector<int> side(pairs);
      for (int pid = 0; pid < pairs; pid++) side[pid] = (mask >> pid) & 1u;
      return detail::partition_from_pair_sides(c, side);
    }
  }
  return std::nullopt;
}

// Seeded uniform shuffle of the color multiset {0,0,0,0,1,...}.
inline PebbleColoring random_coloring(int n, std::uint64_t seed) {
  PebbleColoring c;
  c.n = n;
  c.color_of.resize(4 * n);
  for (int i = 0; i < 4 * n; i++) c.color_of[i] = i / 4;
  std::mt19937_64 rng(seed);
  std::shuffle(c.color_of.begin(), c.color_of.end(), rng);
  return c;
}

}  // namespace imo::pebbles
