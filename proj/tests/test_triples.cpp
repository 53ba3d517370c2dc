#include <algorithm>
#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "paircover/triples.hpp"

using namespace paircover;

namespace {

std::set<Triple> as_set(const TripleSet& ts) {
  return {ts.by_customer.begin(), ts.by_customer.end()};
}

}  // namespace

TEST_CASE("triple mode names round trip") {
  for (TripleMode m : {TripleMode::set_disjoint,
                       TripleMode::path_vertex_disjoint,
                       TripleMode::path_arc_disjoint})
    CHECK(triple_mode_from_string(to_string(m)) == m);
  CHECK_THROWS(triple_mode_from_string("nope"));
}

TEST_CASE("generators match the exhaustive oracle and nest") {
  SplitMix64 rng(21);
  for (int trial = 0; trial < 60; ++trial) {
    Network net = testutil::random_symmetric_network(rng, 4, 10);
    TripleSet set_fast = gen_set_disjoint(net);
    TripleSet vtx_fast = gen_path_disjoint(net, PathDisjointness::vertex);
    TripleSet arc_fast = gen_path_disjoint(net, PathDisjointness::arc);
    CHECK(as_set(set_fast) ==
          as_set(brute_force_triples(net, TripleMode::set_disjoint)));
    CHECK(as_set(vtx_fast) ==
          as_set(brute_force_triples(net, TripleMode::path_vertex_disjoint)));
    CHECK(as_set(arc_fast) ==
          as_set(brute_force_triples(net, TripleMode::path_arc_disjoint)));
    // Set-disjoint implies a vertex-disjoint pair implies an arc-disjoint
    // pair.
    auto s = as_set(set_fast), v = as_set(vtx_fast), a = as_set(arc_fast);
    CHECK(std::includes(v.begin(), v.end(), s.begin(), s.end()));
    CHECK(std::includes(a.begin(), a.end(), v.begin(), v.end()));
  }
}

TEST_CASE("sorted copies agree and offsets index them") {
  SplitMix64 rng(22);
  Network net = testutil::random_symmetric_network(rng, 8, 12);
  TripleSet ts = gen_set_disjoint(net);
  CHECK(ts.by_min.size() == ts.by_customer.size());
  CHECK(ts.by_max.size() == ts.by_customer.size());
  CHECK(as_set(ts) == std::set<Triple>(ts.by_min.begin(), ts.by_min.end()));
  for (const Triple& t : ts.by_customer) CHECK(t.f1 < t.f2);
  for (int v = 0; v < net.vertex_count; ++v) {
    for (std::size_t i = ts.customer_start[v]; i < ts.customer_start[v + 1];
         ++i)
      CHECK(ts.by_customer[i].c == v);
    for (std::size_t i = ts.min_start[v]; i < ts.min_start[v + 1]; ++i)
      CHECK(ts.by_min[i].f1 == v);
    for (std::size_t i = ts.max_start[v]; i < ts.max_start[v + 1]; ++i)
      CHECK(ts.by_max[i].f2 == v);
  }
}

TEST_CASE("stats and dump format") {
  // Path 0-1-2, everything a facility, ends customers: both ends are covered
  // by the disjoint pair of directions at... each customer's only disjoint
  // option is pairs through distinct first hops.
  std::vector<Arc> arcs{Arc{0, 1, 1}, Arc{1, 0, 1}, Arc{1, 2, 1},
                        Arc{2, 1, 1}};
  Network net = make_network(3, arcs, {1}, {0, 1, 2});
  TripleSet ts = gen_set_disjoint(net);
  REQUIRE(ts.size() == 1);  // (1, 0, 2)
  CHECK(ts.by_customer[0] == Triple{1, 0, 2});
  TripleStats st = triple_stats(ts, net);
  CHECK(st.count == 1);
  CHECK(st.possible == 1);  // 1 * 2 * 1 / 2
  CHECK(st.percent == 100.0);
  CHECK(dump_triples(ts) == "p triples set 1\nt 1 0 2\n");
}

TEST_CASE("brute force refuses oversized instances") {
  SplitMix64 rng(23);
  Network net = testutil::random_symmetric_network(rng, 15, 15);
  CHECK_THROWS(brute_force_triples(net, TripleMode::set_disjoint, 14));
}
