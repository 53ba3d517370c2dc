#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "paircover/hitting.hpp"
#include "paircover/scp.hpp"

namespace paircover {

struct ExactResult {
  std::vector<int> cover;  // ascending facility indices
  SolveStatus status = SolveStatus::optimal;
  std::uint64_t nodes = 0;
  int root_lower_bound = 0;
};

// Branch and bound on facility inclusion: branch on the facility with the
// highest residual coverage (ties lowest index), best-first by lower bound
// (ties DFS). Incumbents come from greedy completions; lower bounds from a
// packing of customers with disjoint candidate sets, plus the exact hitting
// set bound at the root when `net` is given and the instance carries
// set-disjoint triples.
ExactResult solve_exact(const ScpInstance& inst,
                        std::uint64_t node_budget = 10'000'000,
                        const Network* net = nullptr);

// Exhaustive oracle: subsets in increasing-size order, first valid cover
// wins. Refuses more than 20 facilities.
std::vector<int> brute_force_optimum(const ScpInstance& inst);

// LP text (Minimize / Subject To / Bounds / Binary / End, LF endings) for
// the pair-cover integer program: binary x per facility, continuous y per
// pair occurring in a triple, rows y <= x twice per pair and one cover row
// per customer. Byte-identical across runs.
std::string export_mip_lp(const ScpInstance& inst);
void export_mip_lp_file(const ScpInstance& inst, const std::string& path);

// LP text for the hitting-set program: binary x per facility, one >= 1 row
// per element over its hitters.
std::string export_hslb_lp(const HittingSetInstance& hs);
void export_hslb_lp_file(const HittingSetInstance& hs,
                         const std::string& path);

}  // namespace paircover
