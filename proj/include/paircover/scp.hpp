#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "paircover/graph.hpp"
#include "paircover/triples.hpp"

namespace paircover {

// A triple in instance-local index space: customer u covered by the facility
// pair {s1, s2}, s1 < s2.
struct ScpTriple {
  int u = 0;
  int s1 = 0;
  int s2 = 0;

  friend bool operator==(const ScpTriple&, const ScpTriple&) = default;
};

// General Set Cover by Pairs instance. Customers and facilities live in
// compact index spaces; a customer that is also a facility covers itself
// whenever that facility is chosen (self-cover).
struct ScpInstance {
  int num_customers = 0;
  int num_facilities = 0;
  std::vector<int> self_facility;    // per customer: facility index or -1
  std::vector<int> facility_customer;  // per facility: customer index or -1

  // Three sorted copies of the triple list with per-key start offsets,
  // mirroring the TripleSet layout.
  std::vector<ScpTriple> by_u;   // sorted (u, s1, s2)
  std::vector<ScpTriple> by_s1;  // sorted (s1, s2, u)
  std::vector<ScpTriple> by_s2;  // sorted (s2, s1, u)
  std::vector<std::size_t> u_start;   // size num_customers+1
  std::vector<std::size_t> s1_start;  // size num_facilities+1
  std::vector<std::size_t> s2_start;  // size num_facilities+1

  // Present when the instance was derived from a network: facility index i
  // corresponds to vertex facility_vertex[i].
  std::vector<int> facility_vertex;
  std::vector<int> customer_vertex;
  TripleMode mode = TripleMode::set_disjoint;
  bool from_set_disjoint_network = false;

  std::size_t triple_count() const { return by_u.size(); }
};

// Validates index ranges, canonicalizes s1 < s2, sorts the three copies.
ScpInstance make_scp_instance(int num_customers, int num_facilities,
                              std::vector<int> self_facility,
                              std::vector<ScpTriple> triples);

// Network view: facilities are net.facilities positions, customers are the
// members of C mapped to their facility index.
ScpInstance make_scp_instance(const Network& net, const TripleSet& triples);

// Facility indices (sorted) -> vertex ids, for network-derived instances.
std::vector<int> cover_vertices(const ScpInstance& inst,
                                const std::vector<int>& cover);

struct CoverCheck {
  bool valid = true;
  int first_uncovered = -1;  // customer index
};

// True iff every customer is chosen (self-cover) or has a triple with both
// facilities chosen.
CoverCheck validate_cover(const ScpInstance& inst,
                          const std::vector<int>& cover);

class InfeasibleError : public std::runtime_error {
 public:
  InfeasibleError(const std::string& what, int customer)
      : std::runtime_error(what), uncoverable_customer(customer) {}
  int uncoverable_customer;
};

// Solution file: comments, then `s <size>` and one `v <facility-id>` line per
// member. Ids are vertex ids for network-derived instances, facility indices
// otherwise.
std::string format_solution(const ScpInstance& inst,
                            const std::vector<int>& cover,
                            const std::vector<std::string>& comments);

}  // namespace paircover
