#pragma once

#include <utility>
#include <vector>

#include "paircover/graph.hpp"

namespace paircover {

// Undirected block decomposition. Blocks with three or more vertices are the
// 2-connected components; two-vertex blocks are bridges. Every undirected
// edge appears in exactly one component edge list or in the bridge list.
struct BlockTree {
  std::vector<std::vector<int>> components;  // sorted vertex sets
  std::vector<std::vector<std::pair<int, int>>> component_edges;  // a < b
  std::vector<int> articulation_points;  // sorted
  std::vector<std::pair<int, int>> bridges;  // a < b
};

// Hopcroft-Tarjan lowpoint DFS over the undirected view. Requires a
// symmetric network.
BlockTree biconnected_components(const Network& net);

// Minimum path-disjoint cover when the undirected view is a tree: delete
// non-customer leaves repeatedly, return the residual leaves. A one-vertex
// residual counts as its own leaf.
std::vector<int> tree_optimum(const Network& net);

struct UpdflBound {
  int value = 0;
  std::vector<int> witness;  // sorted vertex ids, an optimal UPDFL cover
};

// Unconstrained path-disjoint optimum, a lower bound for the shortest-path
// problem: prune non-customer leaves and leaf components without internal
// customers; a 2-connected residual needs one or two customers, otherwise
// take every residual leaf plus one internal customer per leaf component.
UpdflBound updfl_lower_bound(const Network& net);

// Worst-case gap family for the hitting-set bound: three hub facilities that
// pairwise overlap at every customer, forcing all n customers to cover
// themselves while the hitting set needs only the hubs. Self-validates
// (bound 3, infeasible witness, optimum n) before returning.
Network build_hslb_gap_fixture(int n);

// Worst-case gap family for the unconstrained bound: N middle customers each
// reachable by shortest paths only through a private gate vertex, plus top
// and bottom customers joined by length-6 and length-2 detours. 7N+2
// vertices; self-validates the bound value 2 and that no middle customer has
// a disjoint shortest-path pair.
Network build_updfl_gap_fixture(int N);

}  // namespace paircover
