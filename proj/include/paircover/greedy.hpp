#pragma once

#include <cstdint>
#include <vector>

#include "paircover/rng.hpp"
#include "paircover/scp.hpp"

namespace paircover {

enum class StartMode { best_pair, random_customer };
enum class DeleteMode { reverse, random };

struct GreedyOptions {
  StartMode start_mode = StartMode::best_pair;
  DeleteMode delete_mode = DeleteMode::reverse;
  std::uint64_t rng_seed = 0;
};

struct GreedyResult {
  std::vector<int> cover;      // sorted facility indices
  std::vector<int> add_order;  // facilities in the order they were added
  std::size_t triple_accesses = 0;
};

// One randomized construction (no minimalization): repeatedly add the
// facility covering the most additional customers, ties broken uniformly at
// random. Throws InfeasibleError when some customer cannot be covered.
GreedyResult greedy_construct(const ScpInstance& inst,
                              const GreedyOptions& opts);

// Construction seeded with an initial facility set (added first, in order),
// then extended greedily with randomized tie-breaking.
GreedyResult greedy_construct_from(const ScpInstance& inst,
                                   const std::vector<int>& initial,
                                   SplitMix64& rng);

// Deterministic completion (lowest-index ties, no randomness, no
// minimalization); fitness decoding for the genetic algorithm.
std::vector<int> greedy_complete(const ScpInstance& inst,
                                 const std::vector<int>& initial);

// Removes facilities one at a time while the cover stays valid; the result is
// 1-minimal. `cover_in_order` is consumed in reverse for DeleteMode::reverse,
// shuffled for DeleteMode::random. Requiredness is detected through the
// covercount bucket lists.
std::vector<int> minimalize(const ScpInstance& inst,
                            const std::vector<int>& cover_in_order,
                            DeleteMode mode, SplitMix64& rng,
                            std::size_t* triple_accesses = nullptr);

// One construct + minimalize run.
GreedyResult greedy_run(const ScpInstance& inst, const GreedyOptions& opts);

struct MultiResult {
  std::vector<int> best_cover;
  int best_iteration = 0;
  std::vector<int> sizes;  // per-iteration cover sizes
};

// Best of `iterations` runs, cycling the four (start x delete) option
// combinations in equal blocks (remainder to earlier blocks). Iteration i
// uses seed base_seed + i.
MultiResult greedy_multi(const ScpInstance& inst, int iterations,
                         std::uint64_t base_seed, int jobs = 1);

// The four option combinations in block order.
GreedyOptions greedy_combo(int iteration, int iterations,
                           std::uint64_t base_seed);

}  // namespace paircover
