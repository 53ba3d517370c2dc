#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "paircover/graph.hpp"
#include "paircover/rng.hpp"
#include "paircover/scp.hpp"

namespace paircover {

// Hitting-set view: element i must be hit by one of hitters[i] (facility
// indices). Elements built from a network carry (customer vertex, neighbor
// vertex) labels; generic instances use (-1, -1).
struct HittingSetInstance {
  int num_facilities = 0;
  std::vector<std::pair<int, int>> elements;
  std::vector<std::vector<int>> hitters;  // per element, ascending
  std::vector<int> facility_vertex;       // vertex ids when network-derived
};

// One element per (customer c, out-neighbor x of c), hit by f iff f = c or
// x lies on no shortest c->f path. Every element is hit by c itself.
HittingSetInstance build_hslb_instance(const Network& net);

// Greedy max-coverage; ties uniform at random, or lowest index when rng is
// null.
std::vector<int> greedy_hitting_set(const HittingSetInstance& hs,
                                    SplitMix64* rng);

enum class SolveStatus { optimal, budget_exceeded };

struct ExactHittingResult {
  std::vector<int> hitting_set;  // ascending facility indices
  int value = 0;
  SolveStatus status = SolveStatus::optimal;
  std::uint64_t nodes = 0;
};

// Branch and bound over facility bitmasks; refuses instances with more than
// `size_cap` facilities (export the LP instead). Bounds: greedy incumbent
// above, a packing of pairwise-disjoint elements below.
ExactHittingResult exact_hitting_set(const HittingSetInstance& hs,
                                     std::uint64_t node_budget = 50'000'000,
                                     int size_cap = 256);

// `hslb <value> feasible={yes|no}`
std::string format_hslb_line(int value, bool feasible);

struct GoodnessTable {
  // Per customer index: facilities f (ascending) with f != c whose shortest
  // c->f paths all leave c through one arc, and that arc's head.
  std::vector<std::vector<int>> good;
  std::vector<std::vector<int>> via;

  int t_good_count(int t) const;
  std::vector<int> t_good_customers(int t) const;  // customer indices
};

GoodnessTable goodness_table(const Network& net);

struct HittingIterationStats {
  int x_size = 0;   // initial hitting set
  int xy_size = 0;  // X for SHS, |X u Y| for DHS
  int final_size = 0;
};

struct HittingHeuristicResult {
  std::vector<int> best_cover;  // ascending facility indices
  int best_iteration = 0;
  int t_good_count = 0;  // DHS only
  std::vector<HittingIterationStats> iterations;
};

// Per iteration: greedy hitting set over the Eq-style pair system, extend to
// a cover if needed, minimalize (reverse deletes on even iterations, random
// on odd). Requires a set-disjoint instance.
HittingHeuristicResult shs(const Network& net, const ScpInstance& inst,
                           int iterations, std::uint64_t base_seed);

// Double hitting set with goodness threshold t; covers the t-good customers
// through two hitting sets, then extends greedily to the rest.
HittingHeuristicResult dhs(const Network& net, const ScpInstance& inst, int t,
                           int iterations, std::uint64_t base_seed);

}  // namespace paircover
