#include <algorithm>

#include "doctest.h"
#include "helpers.hpp"
#include "paircover/exact.hpp"
#include "paircover/greedy.hpp"
#include "paircover/hitting.hpp"
#include "paircover/triples.hpp"

using namespace paircover;

TEST_CASE("brute force handles the degenerate shapes") {
  // No customers at all.
  ScpInstance empty = make_scp_instance(0, 3, {}, {});
  CHECK(brute_force_optimum(empty).empty());
  // Everyone self-covers, no triples: the cover is all customers.
  ScpInstance selves = make_scp_instance(3, 3, {0, 1, 2}, {});
  CHECK(brute_force_optimum(selves) == std::vector<int>{0, 1, 2});
  ScpInstance stuck = make_scp_instance(1, 2, {-1}, {});
  CHECK_THROWS_AS(brute_force_optimum(stuck), InfeasibleError);
}

TEST_CASE("solve_exact equals brute force on random networks") {
  SplitMix64 rng(61);
  for (int trial = 0; trial < 60; ++trial) {
    Network net = testutil::random_symmetric_network(rng, 4, 10);
    TripleMode mode = trial % 2 == 0 ? TripleMode::set_disjoint
                                     : TripleMode::path_vertex_disjoint;
    ScpInstance inst = make_scp_instance(net, gen_triples(net, mode));
    std::vector<int> oracle = brute_force_optimum(inst);
    ExactResult r = solve_exact(inst, 10'000'000, &net);
    REQUIRE(r.status == SolveStatus::optimal);
    CHECK(r.cover.size() == oracle.size());
    CHECK(validate_cover(inst, r.cover).valid);
    CHECK(r.root_lower_bound <= static_cast<int>(oracle.size()));
  }
}

TEST_CASE("a forced self-cover instance solves in one step") {
  ScpInstance inst = make_scp_instance(1, 3, {0}, {ScpTriple{0, 1, 2}});
  ExactResult r = solve_exact(inst);
  CHECK(r.status == SolveStatus::optimal);
  CHECK(r.cover == std::vector<int>{0});
}

TEST_CASE("pair-cover LP export is deterministic with the exact row counts") {
  ScpInstance inst = make_scp_instance(1, 2, {-1}, {ScpTriple{0, 0, 1}});
  std::string lp = export_mip_lp(inst);
  CHECK(lp == export_mip_lp(inst));
  // 2 binaries, 1 pair variable, 3 rows: one cover row, two link rows.
  CHECK(std::count(lp.begin(), lp.end(), '\n') > 0);
  CHECK(lp.find("Minimize\n obj: x_0 + x_1\n") == 0);
  CHECK(lp.find(" cov_0: y_0_1 >= 1\n") != std::string::npos);
  CHECK(lp.find(" lnka_0_1: y_0_1 - x_0 <= 0\n") != std::string::npos);
  CHECK(lp.find(" lnkb_0_1: y_0_1 - x_1 <= 0\n") != std::string::npos);
  CHECK(lp.find("Bounds\n 0 <= y_0_1 <= 1\n") != std::string::npos);
  CHECK(lp.find("Binary\n x_0\n x_1\nEnd\n") != std::string::npos);
}

TEST_CASE("LP row counts follow the closed forms") {
  SplitMix64 rng(62);
  for (int trial = 0; trial < 20; ++trial) {
    Network net = testutil::random_symmetric_network(rng, 4, 10);
    ScpInstance inst = make_scp_instance(net, gen_set_disjoint(net));
    std::string lp = export_mip_lp(inst);
    std::size_t pairs = 0;
    for (std::size_t i = 0; i < inst.by_s1.size();) {
      std::size_t j = i;
      while (j < inst.by_s1.size() && inst.by_s1[j].s1 == inst.by_s1[i].s1 &&
             inst.by_s1[j].s2 == inst.by_s1[i].s2)
        ++j;
      ++pairs;
      i = j;
    }
    auto count = [&](const std::string& needle) {
      std::size_t n = 0, pos = 0;
      while ((pos = lp.find(needle, pos)) != std::string::npos) {
        ++n;
        pos += needle.size();
      }
      return n;
    };
    CHECK(count(" cov_") == static_cast<std::size_t>(inst.num_customers));
    CHECK(count(" lnka_") == pairs);
    CHECK(count(" lnkb_") == pairs);
  }
}

TEST_CASE("hitting LP export covers every element once") {
  SplitMix64 rng(63);
  Network net = testutil::random_symmetric_network(rng, 4, 9);
  HittingSetInstance hs = build_hslb_instance(net);
  std::string lp = export_hslb_lp(hs);
  CHECK(lp == export_hslb_lp(hs));
  std::size_t rows = 0, pos = 0;
  while ((pos = lp.find(">= 1", pos)) != std::string::npos) {
    ++rows;
    pos += 4;
  }
  CHECK(rows == hs.elements.size());
}
