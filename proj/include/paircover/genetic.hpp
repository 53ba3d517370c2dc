#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "paircover/rng.hpp"
#include "paircover/scp.hpp"

namespace paircover {

struct Chromosome {
  std::vector<std::uint8_t> genes;  // length num_facilities, values 0/1
  int fitness = -1;                 // decoded cover size; -1 = not evaluated
};

struct GaParams {
  int population = 0;       // 0 -> min(300, |F|)
  int stall_limit = 0;      // 0 -> |V| (facility count when no network)
  double elite_fraction = 0.15;
  double immigrant_fraction = 0.10;
  double elite_gene_prob = 0.70;
  bool minimalize_final = false;
  std::uint64_t rng_seed = 0;
};

struct GaGeneration {
  int generation = 0;
  int best = 0;   // best fitness in population
  double mean = 0.0;
  int stall = 0;  // generations since last best-ever improvement
};

struct GaResult {
  std::vector<int> best_cover;
  int best_fitness = 0;
  std::vector<GaGeneration> log;
};

// Start from the facilities with gene 1; extend (if needed) with the
// deterministic greedy so fitness is a pure function of the genes.
std::vector<int> decode(const ScpInstance& inst, const Chromosome& chrom);

GaResult evolve(const ScpInstance& inst, const GaParams& params);

// Comma-separated lines: generation, best, mean, stall.
std::string format_generation_log(const std::vector<GaGeneration>& log);

}  // namespace paircover
