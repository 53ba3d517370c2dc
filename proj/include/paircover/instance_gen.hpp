#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "paircover/graph.hpp"
#include "paircover/rng.hpp"

namespace paircover {

enum class WeightMode { unit, uniform_1_30 };

struct GenParams {
  int transit_domains = 1;        // T
  int transit_per_domain = 2;     // N_T
  int stub_domains = 3;           // S, per transit vertex
  int stub_per_domain = 8;        // N_S, exact size of every stub domain
  double intra_transit_prob = 0.6;
  double intra_stub_prob = 0.42;
  double mean_transit_edges = 2.0;  // inter-domain edges per transit domain
  WeightMode weight_mode = WeightMode::unit;
  std::uint64_t rng_seed = 0;
};

// Hierarchical random topology: T transit domains of N_T vertices, S stub
// domains of N_S vertices hanging off each transit vertex. Intra-domain
// edges drawn by probability and redrawn until the domain is connected;
// likewise the inter-domain backbone. Symmetric, strongly connected; C and F
// left empty.
Network gen_transit_stub(const GenParams& params);

struct DemandMatrix {
  int n = 0;
  int dmax = 0;                // hop diameter
  std::vector<double> demand;  // row-major, zero diagonal

  double at(int u, int v) const {
    return demand[static_cast<std::size_t>(u) * n + v];
  }
};

// t(u,v) = r(u,v) * o(u) * d(v) * e^(-D(u,v)/Dmax) with hop-count D.
DemandMatrix gravitational_demands(const Network& net, SplitMix64& rng);

// Formula core with the random factors supplied, for direct instantiation:
// r is row-major n*n.
DemandMatrix gravitational_demands_core(const Network& net,
                                        const std::vector<double>& o,
                                        const std::vector<double>& d,
                                        const std::vector<double>& r);

// `d <u> <v> <value>` per off-diagonal pair, 9 significant digits.
std::string format_demands(const DemandMatrix& dm);

// |F| = ceil(|V|/y) uniform over V, |C| = ceil(|V|/x) uniform over F;
// requires x >= y.
Network sample_cf(const Network& net, int x, int y, SplitMix64& rng);

}  // namespace paircover
