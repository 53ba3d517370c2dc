#include "paircover/genetic.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "paircover/greedy.hpp"

namespace paircover {
namespace {

Chromosome random_chromosome(int len, SplitMix64& rng) {
  Chromosome c;
  c.genes.resize(len);
  for (int i = 0; i < len; ++i) c.genes[i] = rng.next_bool() ? 1 : 0;
  return c;
}

void evaluate(const ScpInstance& inst, Chromosome& c) {
  if (c.fitness >= 0) return;
  c.fitness = static_cast<int>(decode(inst, c).size());
}

}  // namespace

std::vector<int> decode(const ScpInstance& inst, const Chromosome& chrom) {
  if (static_cast<int>(chrom.genes.size()) != inst.num_facilities)
    throw std::invalid_argument("gene vector length mismatch");
  std::vector<int> initial;
  for (int s = 0; s < inst.num_facilities; ++s)
    if (chrom.genes[s]) initial.push_back(s);
  return greedy_complete(inst, initial);
}

GaResult evolve(const ScpInstance& inst, const GaParams& params) {
  int len = inst.num_facilities;
  int p = params.population > 0 ? params.population : std::min(300, len);
  if (p < 2) p = 2;
  int q = params.stall_limit > 0
              ? params.stall_limit
              : (inst.facility_vertex.empty()
                     ? len
                     : static_cast<int>(inst.facility_vertex.size() +
                                        inst.customer_vertex.size()));
  if (params.elite_fraction <= 0 || params.elite_fraction >= 1 ||
      params.immigrant_fraction <= 0 || params.immigrant_fraction >= 1 ||
      params.elite_fraction + params.immigrant_fraction >= 1)
    throw std::invalid_argument("invalid population fractions");

  int elite = static_cast<int>(std::ceil(params.elite_fraction * p));
  int immigrants = static_cast<int>(std::ceil(params.immigrant_fraction * p));
  if (elite < 1) elite = 1;
  if (elite + immigrants > p) immigrants = p - elite;

  SplitMix64 rng(derive_seed(params.rng_seed, 0x65766f));  // evolution stream

  std::vector<Chromosome> pop;
  pop.reserve(p);
  for (int i = 0; i < p; ++i) {
    SplitMix64 ind(derive_seed(params.rng_seed, 0x696d00 + i));
    pop.push_back(random_chromosome(len, ind));
  }

  GaResult res;
  res.best_fitness = inst.num_facilities + 1;
  int stall = 0;
  int generation = 0;
  int immigrant_serial = p;

  auto rank = [&]() {
    for (Chromosome& c : pop) evaluate(inst, c);
    std::stable_sort(pop.begin(), pop.end(),
                     [](const Chromosome& a, const Chromosome& b) {
                       return a.fitness < b.fitness;
                     });
  };

  while (true) {
    rank();
    if (pop[0].fitness < res.best_fitness) {
      res.best_fitness = pop[0].fitness;
      res.best_cover = decode(inst, pop[0]);
      stall = 0;
    } else {
      ++stall;
    }
    double mean = 0;
    for (const Chromosome& c : pop) mean += c.fitness;
    mean /= p;
    res.log.push_back(GaGeneration{generation, pop[0].fitness, mean, stall});
    if (stall >= q) break;

    std::vector<Chromosome> next;
    next.reserve(p);
    for (int i = 0; i < elite; ++i) next.push_back(pop[i]);
    for (int i = 0; i < immigrants; ++i) {
      SplitMix64 ind(
          derive_seed(params.rng_seed, 0x696d00 + immigrant_serial++));
      next.push_back(random_chromosome(len, ind));
    }
    while (static_cast<int>(next.size()) < p) {
      const Chromosome& a = pop[rng.next_below(elite)];
      const Chromosome& b =
          pop[elite + rng.next_below(static_cast<std::uint64_t>(p - elite))];
      Chromosome child;
      child.genes.resize(len);
      for (int g = 0; g < len; ++g)
        child.genes[g] = rng.next_unit_open() < params.elite_gene_prob
                             ? a.genes[g]
                             : b.genes[g];
      next.push_back(std::move(child));
    }
    pop = std::move(next);
    ++generation;
  }

  if (params.minimalize_final) {
    SplitMix64 mrng(derive_seed(params.rng_seed, 0x6d696e));
    res.best_cover = minimalize(inst, res.best_cover, DeleteMode::reverse,
                                mrng, nullptr);
    res.best_fitness = static_cast<int>(res.best_cover.size());
  }
  return res;
}

std::string format_generation_log(const std::vector<GaGeneration>& log) {
  std::ostringstream out;
  out << "generation,best,mean,stall\n";
  for (const GaGeneration& g : log) {
    char mean[32];
    std::snprintf(mean, sizeof(mean), "%.4f", g.mean);
    out << g.generation << ',' << g.best << ',' << mean << ',' << g.stall
        << '\n';
  }
  return out.str();
}

}  // namespace paircover
