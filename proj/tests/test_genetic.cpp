#include <algorithm>

#include "doctest.h"
#include "helpers.hpp"
#include "paircover/exact.hpp"
#include "paircover/genetic.hpp"
#include "paircover/greedy.hpp"
#include "paircover/triples.hpp"

using namespace paircover;

namespace {

ScpInstance random_instance(SplitMix64& rng) {
  Network net = testutil::random_symmetric_network(rng, 4, 9);
  return make_scp_instance(net, gen_set_disjoint(net));
}

}  // namespace

TEST_CASE("decode boundary chromosomes") {
  SplitMix64 rng(41);
  ScpInstance inst = random_instance(rng);
  Chromosome ones;
  ones.genes.assign(inst.num_facilities, 1);
  std::vector<int> full(inst.num_facilities);
  for (int f = 0; f < inst.num_facilities; ++f) full[f] = f;
  CHECK(decode(inst, ones) == full);

  Chromosome zeros;
  zeros.genes.assign(inst.num_facilities, 0);
  CHECK(decode(inst, zeros) == greedy_complete(inst, {}));

  // A chromosome encoding an optimum decodes to it unchanged.
  std::vector<int> opt = brute_force_optimum(inst);
  Chromosome planted;
  planted.genes.assign(inst.num_facilities, 0);
  for (int f : opt) planted.genes[f] = 1;
  CHECK(decode(inst, planted) == opt);

  Chromosome bad;
  bad.genes.assign(inst.num_facilities + 1, 0);
  CHECK_THROWS(decode(inst, bad));
}

TEST_CASE("evolution is elitist, seeded, and at least as good as one greedy") {
  SplitMix64 rng(42);
  for (int trial = 0; trial < 10; ++trial) {
    ScpInstance inst = random_instance(rng);
    GaParams params;
    params.rng_seed = trial;
    params.stall_limit = 12;
    GaResult a = evolve(inst, params);
    GaResult b = evolve(inst, params);
    CHECK(a.log.size() == b.log.size());
    CHECK(a.best_cover == b.best_cover);
    CHECK(validate_cover(inst, a.best_cover).valid);
    CHECK(a.best_fitness == static_cast<int>(a.best_cover.size()));
    // Best fitness never worsens across generations.
    for (std::size_t g = 1; g < a.log.size(); ++g)
      CHECK(a.log[g].best <= a.log[g - 1].best);
    CHECK(a.log.back().stall == 12);
    // The GA population contains greedy-style decodings, so it cannot lose
    // to a single deterministic completion.
    CHECK(a.best_fitness <=
          static_cast<int>(greedy_complete(inst, {}).size()));
    int opt = static_cast<int>(brute_force_optimum(inst).size());
    CHECK(a.best_fitness >= opt);
  }
}

TEST_CASE("generation log renders as csv") {
  std::vector<GaGeneration> log{{0, 5, 6.25, 0}, {1, 4, 5.5, 0}};
  CHECK(format_generation_log(log) ==
        "generation,best,mean,stall\n0,5,6.2500,0\n1,4,5.5000,0\n");
}

TEST_CASE("population fraction validation") {
  SplitMix64 rng(43);
  ScpInstance inst = random_instance(rng);
  GaParams params;
  params.elite_fraction = 0.6;
  params.immigrant_fraction = 0.6;
  CHECK_THROWS(evolve(inst, params));
}
