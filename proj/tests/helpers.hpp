#pragma once

#include <algorithm>
#include <vector>

#include "paircover/graph.hpp"
#include "paircover/rng.hpp"

namespace testutil {

// Connected symmetric network: random spanning tree plus extra edges, random
// weights, random C subset of F subset of V.
inline paircover::Network random_symmetric_network(paircover::SplitMix64& rng,
                                                   int min_n = 4,
                                                   int max_n = 12,
                                                   bool unit_weights = false) {
  int n = min_n + static_cast<int>(rng.next_below(max_n - min_n + 1));
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v < n; ++v)
    edges.emplace_back(static_cast<int>(rng.next_below(v)), v);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (rng.next_unit_open() < 0.2) edges.emplace_back(a, b);
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  std::vector<paircover::Arc> arcs;
  for (auto [a, b] : edges) {
    std::int64_t w =
        unit_weights ? 1 : static_cast<std::int64_t>(1 + rng.next_below(5));
    arcs.push_back(paircover::Arc{a, b, w});
    arcs.push_back(paircover::Arc{b, a, w});
  }
  std::vector<int> facilities, customers;
  for (int v = 0; v < n; ++v)
    if (rng.next_unit_open() < 0.7) facilities.push_back(v);
  while (facilities.size() < 2) {
    int v = static_cast<int>(rng.next_below(n));
    if (!std::count(facilities.begin(), facilities.end(), v))
      facilities.push_back(v);
  }
  std::sort(facilities.begin(), facilities.end());
  for (int f : facilities)
    if (rng.next_unit_open() < 0.6) customers.push_back(f);
  if (customers.empty()) customers.push_back(facilities[0]);
  return paircover::make_network(n, std::move(arcs), std::move(customers),
                                 std::move(facilities));
}

inline paircover::Network random_tree(paircover::SplitMix64& rng,
                                      int min_n = 3, int max_n = 12) {
  int n = min_n + static_cast<int>(rng.next_below(max_n - min_n + 1));
  std::vector<paircover::Arc> arcs;
  for (int v = 1; v < n; ++v) {
    int u = static_cast<int>(rng.next_below(v));
    arcs.push_back(paircover::Arc{u, v, 1});
    arcs.push_back(paircover::Arc{v, u, 1});
  }
  std::vector<int> customers;
  for (int v = 0; v < n; ++v)
    if (rng.next_unit_open() < 0.6) customers.push_back(v);
  if (customers.empty()) customers.push_back(0);
  std::vector<int> all(n);
  for (int v = 0; v < n; ++v) all[v] = v;
  return paircover::make_network(n, std::move(arcs), std::move(customers),
                                 all);
}

// Bellman-Ford distance oracle.
inline std::vector<std::int64_t> bellman_ford(const paircover::Network& net,
                                              int source) {
  const std::int64_t inf = std::int64_t{1} << 60;
  std::vector<std::int64_t> dist(net.vertex_count, inf);
  dist[source] = 0;
  for (int pass = 0; pass < net.vertex_count; ++pass)
    for (const paircover::Arc& a : net.arcs)
      if (dist[a.tail] < inf)
        dist[a.head] = std::min(dist[a.head], dist[a.tail] + a.weight);
  return dist;
}

// Every shortest path from c to target, as vertex sequences.
inline void all_shortest_paths_rec(const paircover::Network& net,
                                   const std::vector<std::int64_t>& dist,
                                   int v, int target, std::vector<int>& cur,
                                   std::vector<std::vector<int>>& out) {
  if (v == target) {
    out.push_back(cur);
    return;
  }
  for (int i = net.out_start[v]; i < net.out_start[v + 1]; ++i) {
    const paircover::Arc& a = net.arcs[i];
    if (dist[v] + a.weight == dist[a.head]) {
      cur.push_back(a.head);
      all_shortest_paths_rec(net, dist, a.head, target, cur, out);
      cur.pop_back();
    }
  }
}

inline std::vector<std::vector<int>> all_shortest_paths(
    const paircover::Network& net, int from, int to) {
  auto dist = bellman_ford(net, from);
  std::vector<int> cur{from};
  std::vector<std::vector<int>> out;
  all_shortest_paths_rec(net, dist, from, to, cur, out);
  return out;
}

}  // namespace testutil
