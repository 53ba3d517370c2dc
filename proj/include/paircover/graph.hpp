#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace paircover {

struct Arc {
  int tail = 0;
  int head = 0;
  std::int64_t weight = 1;

  friend bool operator==(const Arc&, const Arc&) = default;
};

// Raised for malformed instance files (carries a line number) and for
// networks violating the model invariants (positive weights, C <= F <= V,
// strong connectivity).
class NetworkError : public std::runtime_error {
 public:
  explicit NetworkError(const std::string& what) : std::runtime_error(what) {}
};

// Weighted strongly-connected digraph with customer set C and facility set F,
// C subset of F. Immutable after construction; arcs are kept sorted by
// (tail, head) and indexed by a CSR offset table.
struct Network {
  int vertex_count = 0;
  std::vector<Arc> arcs;        // sorted by (tail, head), no duplicates
  std::vector<int> customers;   // sorted vertex ids
  std::vector<int> facilities;  // sorted vertex ids
  std::vector<int> out_start;   // size vertex_count+1, offsets into arcs

  int out_degree(int v) const { return out_start[v + 1] - out_start[v]; }
  bool is_customer(int v) const;
  bool is_facility(int v) const;
  // Position of v in the facilities vector, -1 if not a facility.
  int facility_index(int v) const;
};

// Validates all invariants and builds the adjacency index. Throws
// NetworkError with a distinct message per violation.
Network make_network(int vertex_count, std::vector<Arc> arcs,
                     std::vector<int> customers, std::vector<int> facilities);

// Instance file format (line-oriented, '#' comments ignored):
//   p dpfl <vertex_count> <arc_count>
//   a <tail> <head> <weight>      (one per arc, any order)
//   c <id> <id> ...
//   f <id> <id> ...
Network load_network(std::istream& in);
Network load_network_string(const std::string& text);
Network load_network_file(const std::string& path);

// Writer emits arcs sorted by (tail, head); load(save(x)) == x bit-exactly.
std::string save_network(const Network& net);
void save_network_file(const Network& net, const std::string& path);

struct ShortestPathDag {
  int source = 0;
  std::vector<std::int64_t> dist;  // exact shortest distance from source
  std::vector<std::uint8_t> in_dag;  // per arc index: lies on a shortest path
  std::vector<int> order;  // vertices sorted by (dist, id); a topological order
};

// Dijkstra with a binary heap; heap ties broken by smaller vertex id so the
// DAG output is deterministic.
ShortestPathDag shortest_path_dag(const Network& net, int source);

// For a customer c, the sets N(c,f): out-neighbors of c lying on some
// shortest c->f path. Stored as bitsets over a compact local index of the
// DAG arcs out of c.
struct NeighborSets {
  int customer = 0;
  std::vector<int> neighbor_ids;  // heads of DAG arcs out of c, ascending
  int words = 0;                  // 64-bit words per facility row
  std::vector<std::uint64_t> masks;  // facility row i covers net.facilities[i]

  const std::uint64_t* row(int facility_index) const {
    return masks.data() + static_cast<std::size_t>(facility_index) * words;
  }
  bool disjoint(int fi, int fj) const;
  int popcount(int fi) const;
  // The neighbor ids encoded in a row, ascending.
  std::vector<int> neighbors_of(int facility_index) const;
};

// One backward reachability sweep over the DAG per facility.
NeighborSets neighbor_sets(const Network& net, int c);
NeighborSets neighbor_sets(const Network& net, int c,
                           const ShortestPathDag& dag);

struct SymmetryReport {
  bool symmetric = true;
  std::vector<Arc> violations;  // arcs whose equal-weight reverse is missing
};

SymmetryReport check_symmetric(const Network& net);

// Hop-count BFS distances (unit metric), used by the demand model.
std::vector<int> hop_distances(const Network& net, int source);

}  // namespace paircover
