#include <cmath>
#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "paircover/instance_gen.hpp"

using namespace paircover;

TEST_CASE("generated sizes follow the closed form") {
  GenParams p;  // T=1, N_T=2, S=3, N_S=8
  p.rng_seed = 7;
  Network net = gen_transit_stub(p);
  CHECK(net.vertex_count == 50);
  CHECK(check_symmetric(net).symmetric);

  GenParams q;
  q.transit_domains = 2;
  q.transit_per_domain = 5;
  q.stub_domains = 3;
  q.stub_per_domain = 6;
  q.rng_seed = 3;
  CHECK(gen_transit_stub(q).vertex_count == 190);
}

TEST_CASE("same seed reproduces, different seeds differ") {
  GenParams p;
  p.rng_seed = 11;
  std::string a = save_network(gen_transit_stub(p));
  CHECK(a == save_network(gen_transit_stub(p)));
  p.rng_seed = 12;
  CHECK(a != save_network(gen_transit_stub(p)));
}

TEST_CASE("uniform weights stay in range and stay symmetric") {
  GenParams p;
  p.weight_mode = WeightMode::uniform_1_30;
  p.rng_seed = 5;
  Network net = gen_transit_stub(p);
  CHECK(check_symmetric(net).symmetric);
  for (const Arc& a : net.arcs) {
    CHECK(a.weight >= 1);
    CHECK(a.weight <= 30);
  }
}

TEST_CASE("average undirected degree lands in the plausible band") {
  double total = 0;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    GenParams p;
    p.rng_seed = seed;
    Network net = gen_transit_stub(p);
    total += static_cast<double>(net.arcs.size()) / net.vertex_count;
  }
  double avg = total / 10;  // arcs/vertex = undirected degree
  CHECK(avg >= 2.5);
  CHECK(avg <= 6.0);
}

TEST_CASE("demand formula instantiation and range") {
  SplitMix64 rng(81);
  Network net = testutil::random_symmetric_network(rng, 5, 9, true);
  int n = net.vertex_count;
  // Force every factor to 1 and distance to the diameter.
  std::vector<double> ones(n, 1.0), r(static_cast<std::size_t>(n) * n, 1.0);
  DemandMatrix dm = gravitational_demands_core(net, ones, ones, r);
  // Hop diameter via unit-weight BFS oracle.
  int dmax_oracle = 0;
  for (int u = 0; u < n; ++u) {
    auto hops = hop_distances(net, u);
    for (int v : hops) dmax_oracle = std::max(dmax_oracle, v);
  }
  CHECK(dm.dmax == dmax_oracle);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      if (u == v) continue;
      if (hop_distances(net, u)[v] == dm.dmax)
        CHECK(dm.at(u, v) == doctest::Approx(std::exp(-1.0)));
    }

  DemandMatrix random_dm = gravitational_demands(net, rng);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      if (u == v) {
        CHECK(random_dm.at(u, v) == 0.0);
      } else {
        CHECK(random_dm.at(u, v) > 0.0);
        CHECK(random_dm.at(u, v) < 1.0);
      }
    }
  std::string text = format_demands(random_dm);
  CHECK(text.find("d 0 1 ") == 0);
}

TEST_CASE("customer and facility sampling sizes") {
  GenParams p;
  p.rng_seed = 2;
  Network base = gen_transit_stub(p);  // 50 vertices
  SplitMix64 rng(9);
  Network net = sample_cf(base, 8, 1, rng);
  CHECK(net.facilities.size() == 50);
  CHECK(net.customers.size() == 7);  // ceil(50/8)
  Network all = sample_cf(base, 1, 1, rng);
  CHECK(all.customers.size() == 50);
  CHECK(all.facilities.size() == 50);
  CHECK_THROWS(sample_cf(base, 1, 2, rng));
}
