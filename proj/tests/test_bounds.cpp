#include <algorithm>
#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "paircover/bounds_special.hpp"
#include "paircover/exact.hpp"
#include "paircover/triples.hpp"

using namespace paircover;

namespace {

std::vector<Arc> sym(const std::vector<std::pair<int, int>>& edges) {
  std::vector<Arc> arcs;
  for (auto [a, b] : edges) {
    arcs.push_back(Arc{a, b, 1});
    arcs.push_back(Arc{b, a, 1});
  }
  return arcs;
}

// Quadratic articulation oracle: vertex whose removal disconnects the rest.
std::vector<int> articulation_oracle(const Network& net) {
  int n = net.vertex_count;
  std::vector<int> out;
  for (int skip = 0; skip < n; ++skip) {
    int start = skip == 0 ? 1 : 0;
    if (n <= 2) break;
    std::vector<std::uint8_t> seen(n, 0);
    seen[skip] = 1;
    std::vector<int> stack{start};
    seen[start] = 1;
    int reached = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int i = net.out_start[v]; i < net.out_start[v + 1]; ++i) {
        int to = net.arcs[i].head;
        if (!seen[to]) {
          seen[to] = 1;
          ++reached;
          stack.push_back(to);
        }
      }
    }
    if (reached < n - 1) out.push_back(skip);
  }
  return out;
}

}  // namespace

TEST_CASE("tree optimum on hand shapes") {
  // Path a-b-c, all customers: the endpoints.
  Network path =
      make_network(3, sym({{0, 1}, {1, 2}}), {0, 1, 2}, {0, 1, 2});
  CHECK(tree_optimum(path) == std::vector<int>{0, 2});
  // Star whose center is the only customer.
  Network star = make_network(4, sym({{0, 1}, {0, 2}, {0, 3}}), {0},
                              {0, 1, 2, 3});
  CHECK(tree_optimum(star) == std::vector<int>{0});
  Network cycle =
      make_network(3, sym({{0, 1}, {1, 2}, {0, 2}}), {0}, {0, 1, 2});
  CHECK_THROWS_AS(tree_optimum(cycle), NetworkError);
}

TEST_CASE("tree optimum equals the exhaustive optimum") {
  SplitMix64 rng(71);
  for (int trial = 0; trial < 100; ++trial) {
    Network net = testutil::random_tree(rng, 3, 12);
    std::vector<int> opt = tree_optimum(net);
    TripleSet pd = gen_path_disjoint(net, PathDisjointness::vertex);
    TripleSet sd = gen_set_disjoint(net);
    CHECK(pd.by_customer == sd.by_customer);  // trees: unique shortest paths
    ScpInstance inst = make_scp_instance(net, pd);
    std::vector<int> cover_idx;
    for (int v : opt) cover_idx.push_back(net.facility_index(v));
    std::sort(cover_idx.begin(), cover_idx.end());
    CHECK(validate_cover(inst, cover_idx).valid);
    CHECK(opt.size() == brute_force_optimum(inst).size());
    // Also the linear-time bound coincides with the tree optimum.
    UpdflBound b = updfl_lower_bound(net);
    CHECK(b.value == static_cast<int>(opt.size()));
  }
}

TEST_CASE("block decomposition on hand shapes") {
  Network cycle = make_network(4, sym({{0, 1}, {1, 2}, {2, 3}, {0, 3}}), {0},
                               {0, 1});
  BlockTree t = biconnected_components(cycle);
  CHECK(t.components.size() == 1);
  CHECK(t.articulation_points.empty());
  CHECK(t.bridges.empty());

  // Two triangles sharing vertex 2.
  Network bowtie = make_network(
      5, sym({{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}}), {0},
      {0, 1, 2, 3, 4});
  t = biconnected_components(bowtie);
  CHECK(t.components.size() == 2);
  CHECK(t.articulation_points == std::vector<int>{2});
}

TEST_CASE("decomposition matches the removal oracle and reassembles edges") {
  SplitMix64 rng(72);
  for (int trial = 0; trial < 60; ++trial) {
    Network net = testutil::random_symmetric_network(rng, 4, 12);
    BlockTree t = biconnected_components(net);
    CHECK(t.articulation_points == articulation_oracle(net));
    std::multiset<std::pair<int, int>> rebuilt(t.bridges.begin(),
                                               t.bridges.end());
    for (const auto& edges : t.component_edges)
      rebuilt.insert(edges.begin(), edges.end());
    std::multiset<std::pair<int, int>> expect;
    for (const Arc& a : net.arcs)
      if (a.tail < a.head) expect.emplace(a.tail, a.head);
    CHECK(rebuilt == expect);
  }
}

TEST_CASE("2-connected graphs need at most two customers") {
  Network cycle = make_network(
      5, sym({{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}}), {1, 3},
      {0, 1, 2, 3, 4});
  UpdflBound b = updfl_lower_bound(cycle);
  CHECK(b.value == 2);
  CHECK(b.witness == std::vector<int>{1, 3});
  Network solo = make_network(
      5, sym({{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}}), {2}, {0, 1, 2, 3, 4});
  CHECK(updfl_lower_bound(solo).value == 1);
}

TEST_CASE("updfl lower-bounds the exhaustive optimum") {
  SplitMix64 rng(73);
  for (int trial = 0; trial < 60; ++trial) {
    Network net = testutil::random_symmetric_network(rng, 4, 10, true);
    if (net.customers.empty()) continue;
    UpdflBound b = updfl_lower_bound(net);
    ScpInstance inst = make_scp_instance(
        net, gen_path_disjoint(net, PathDisjointness::vertex));
    CHECK(b.value <=
          static_cast<int>(brute_force_optimum(inst).size()));
  }
}

TEST_CASE("gap fixtures self-validate across sizes") {
  for (int n : {4, 9}) {
    Network net = build_hslb_gap_fixture(n);
    CHECK(net.vertex_count == n + 6);
    CHECK(static_cast<int>(net.customers.size()) == n);
  }
  for (int N : {2, 3}) {
    Network net = build_updfl_gap_fixture(N);
    CHECK(net.vertex_count == 7 * N + 2);
    CHECK(updfl_lower_bound(net).value == 2);
  }
  CHECK_THROWS(build_hslb_gap_fixture(3));
  CHECK_THROWS(build_updfl_gap_fixture(1));
}
