#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "paircover/graph.hpp"

namespace paircover {

enum class TripleMode { set_disjoint, path_vertex_disjoint, path_arc_disjoint };

std::string to_string(TripleMode mode);
TripleMode triple_mode_from_string(const std::string& name);

struct Triple {
  int c = 0;   // customer vertex id
  int f1 = 0;  // smaller-indexed facility vertex id
  int f2 = 0;  // larger-indexed facility vertex id

  friend bool operator==(const Triple&, const Triple&) = default;
  friend auto operator<=>(const Triple&, const Triple&) = default;
};

// The derived SCP relation T, kept in three sorted copies so the greedy
// machinery can stream the portion for any key: by customer c, by the
// smaller facility f1, and by the larger facility f2.
struct TripleSet {
  TripleMode mode = TripleMode::set_disjoint;
  std::vector<Triple> by_customer;  // sorted (c, f1, f2)
  std::vector<Triple> by_min;       // sorted (f1, f2, c)
  std::vector<Triple> by_max;       // sorted (f2, f1, c)
  // Start offsets keyed by vertex id; each has size vertex_count+1.
  std::vector<std::size_t> customer_start;
  std::vector<std::size_t> min_start;
  std::vector<std::size_t> max_start;

  std::size_t size() const { return by_customer.size(); }
};

// Triples with an empty neighbor-set intersection N(c,f1) & N(c,f2).
TripleSet gen_set_disjoint(const Network& net);

enum class PathDisjointness { vertex, arc };

// Triples with a pair of shortest paths sharing no vertex except c
// (vertex mode) or no arc (arc mode). Per customer: unit-capacity
// shortest-path DAG (vertex-split in vertex mode), route one shortest path
// to f1, then a single residual BFS answers all f2 at once.
TripleSet gen_path_disjoint(const Network& net, PathDisjointness kind);

TripleSet gen_triples(const Network& net, TripleMode mode);

// Exhaustive oracle: enumerates every shortest path and tests disjointness
// pairwise, straight from the definitions. Refuses instances above the cap.
TripleSet brute_force_triples(const Network& net, TripleMode mode,
                              int max_vertices = 14);

struct TripleStats {
  std::size_t count = 0;
  std::size_t possible = 0;  // |C| * (|F|-1) * (|F|-2) / 2
  double percent = 0.0;      // 0 when nothing is possible
};

TripleStats triple_stats(const TripleSet& ts, const Network& net);

// Debug dump: `p triples <mode> <count>` then `t <c> <f1> <f2>` lines.
std::string dump_triples(const TripleSet& ts);

}  // namespace paircover
