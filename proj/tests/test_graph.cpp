#include <algorithm>
#include <set>
#include <sstream>

#include "doctest.h"
#include "helpers.hpp"
#include "paircover/graph.hpp"

using namespace paircover;

namespace {

Network tiny() {
  // Square with a diagonal; 0 and 2 are customers, 0..2 facilities.
  std::vector<Arc> arcs;
  auto edge = [&](int a, int b, std::int64_t w) {
    arcs.push_back(Arc{a, b, w});
    arcs.push_back(Arc{b, a, w});
  };
  edge(0, 1, 1);
  edge(1, 2, 1);
  edge(2, 3, 1);
  edge(3, 0, 1);
  edge(0, 2, 2);
  return make_network(4, arcs, {0, 2}, {0, 1, 2});
}

}  // namespace

TEST_CASE("network validation rejects bad input") {
  CHECK_THROWS_AS(make_network(2, {Arc{0, 1, 0}, Arc{1, 0, 1}}, {0}, {0, 1}),
                  NetworkError);
  CHECK_THROWS_AS(make_network(2, {Arc{0, 0, 1}}, {0}, {0, 1}), NetworkError);
  CHECK_THROWS_AS(
      make_network(2, {Arc{0, 1, 1}, Arc{0, 1, 1}, Arc{1, 0, 1}}, {0}, {0}),
      NetworkError);
  // customer not a facility
  CHECK_THROWS_AS(make_network(2, {Arc{0, 1, 1}, Arc{1, 0, 1}}, {0}, {1}),
                  NetworkError);
  // not strongly connected
  CHECK_THROWS_AS(make_network(3, {Arc{0, 1, 1}, Arc{1, 0, 1}, Arc{1, 2, 1}},
                               {0}, {0, 1}),
                  NetworkError);
}

TEST_CASE("instance file round trip is bit exact") {
  Network net = tiny();
  std::string text = save_network(net);
  Network back = load_network_string(text);
  CHECK(save_network(back) == text);
  CHECK(back.vertex_count == net.vertex_count);
  CHECK(back.arcs == net.arcs);
  CHECK(back.customers == net.customers);
  CHECK(back.facilities == net.facilities);
}

TEST_CASE("parser reports line numbers and ignores comments") {
  CHECK_THROWS_WITH_AS(load_network_string("p dpfl 2 1\na 0 1\n"),
                       doctest::Contains("line 2"), NetworkError);
  Network net = load_network_string(
      "# header\np dpfl 2 2\na 0 1 3\n# mid\na 1 0 3\nc 0\nf 0 1\n");
  CHECK(net.vertex_count == 2);
  CHECK(net.arcs[0].weight == 3);
}

TEST_CASE("dijkstra distances match bellman-ford on random networks") {
  SplitMix64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    Network net = testutil::random_symmetric_network(rng);
    int s = static_cast<int>(rng.next_below(net.vertex_count));
    ShortestPathDag dag = shortest_path_dag(net, s);
    auto oracle = testutil::bellman_ford(net, s);
    for (int v = 0; v < net.vertex_count; ++v) CHECK(dag.dist[v] == oracle[v]);
    // DAG arcs are exactly the tight arcs.
    for (std::size_t i = 0; i < net.arcs.size(); ++i) {
      const Arc& a = net.arcs[i];
      bool tight = dag.dist[a.tail] + a.weight == dag.dist[a.head];
      CHECK(static_cast<bool>(dag.in_dag[i]) == tight);
    }
  }
}

TEST_CASE("neighbor sets match path enumeration") {
  SplitMix64 rng(12);
  for (int trial = 0; trial < 40; ++trial) {
    Network net = testutil::random_symmetric_network(rng, 4, 9);
    for (int c : net.customers) {
      NeighborSets ns = neighbor_sets(net, c);
      for (std::size_t fi = 0; fi < net.facilities.size(); ++fi) {
        int f = net.facilities[fi];
        std::set<int> expect;
        if (f != c)
          for (const auto& path : testutil::all_shortest_paths(net, c, f))
            expect.insert(path[1]);
        std::vector<int> got = ns.neighbors_of(static_cast<int>(fi));
        CHECK(std::vector<int>(expect.begin(), expect.end()) == got);
      }
    }
  }
}

TEST_CASE("symmetry checker flags the missing reverse") {
  Network net = make_network(
      3,
      {Arc{0, 1, 1}, Arc{1, 0, 1}, Arc{1, 2, 1}, Arc{2, 1, 2}, Arc{2, 0, 1},
       Arc{0, 2, 1}},
      {0}, {0, 1});
  SymmetryReport rep = check_symmetric(net);
  CHECK_FALSE(rep.symmetric);
  CHECK(rep.violations.size() == 2);  // both directions of the 1-2 edge
}

TEST_CASE("hop distances are BFS distances") {
  Network net = tiny();
  auto hops = hop_distances(net, 0);
  CHECK(hops == std::vector<int>{0, 1, 1, 1});
}
