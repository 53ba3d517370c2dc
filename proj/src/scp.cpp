#include "paircover/scp.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

namespace paircover {

ScpInstance make_scp_instance(int num_customers, int num_facilities,
                              std::vector<int> self_facility,
                              std::vector<ScpTriple> triples) {
  ScpInstance inst;
  inst.num_customers = num_customers;
  inst.num_facilities = num_facilities;
  if (static_cast<int>(self_facility.size()) != num_customers)
    throw std::invalid_argument("self_facility size mismatch");
  inst.self_facility = std::move(self_facility);
  inst.facility_customer.assign(num_facilities, -1);
  for (int u = 0; u < num_customers; ++u) {
    int s = inst.self_facility[u];
    if (s >= num_facilities)
      throw std::invalid_argument("self facility index out of range");
    if (s >= 0) inst.facility_customer[s] = u;
  }
  for (ScpTriple& t : triples) {
    if (t.u < 0 || t.u >= num_customers || t.s1 < 0 ||
        t.s1 >= num_facilities || t.s2 < 0 || t.s2 >= num_facilities ||
        t.s1 == t.s2)
      throw std::invalid_argument("triple references invalid members");
    if (t.s1 > t.s2) std::swap(t.s1, t.s2);
  }
  std::sort(triples.begin(), triples.end(),
            [](const ScpTriple& a, const ScpTriple& b) {
              return std::tie(a.u, a.s1, a.s2) < std::tie(b.u, b.s1, b.s2);
            });
  triples.erase(std::unique(triples.begin(), triples.end()), triples.end());
  inst.by_u = std::move(triples);
  inst.by_s1 = inst.by_u;
  std::sort(inst.by_s1.begin(), inst.by_s1.end(),
            [](const ScpTriple& a, const ScpTriple& b) {
              return std::tie(a.s1, a.s2, a.u) < std::tie(b.s1, b.s2, b.u);
            });
  inst.by_s2 = inst.by_u;
  std::sort(inst.by_s2.begin(), inst.by_s2.end(),
            [](const ScpTriple& a, const ScpTriple& b) {
              return std::tie(a.s2, a.s1, a.u) < std::tie(b.s2, b.s1, b.u);
            });
  auto offsets = [](const std::vector<ScpTriple>& v, int keys, auto key) {
    std::vector<std::size_t> start(keys + 1, 0);
    for (const ScpTriple& t : v) start[key(t) + 1]++;
    for (int i = 0; i < keys; ++i) start[i + 1] += start[i];
    return start;
  };
  inst.u_start = offsets(inst.by_u, num_customers,
                         [](const ScpTriple& t) { return t.u; });
  inst.s1_start = offsets(inst.by_s1, num_facilities,
                          [](const ScpTriple& t) { return t.s1; });
  inst.s2_start = offsets(inst.by_s2, num_facilities,
                          [](const ScpTriple& t) { return t.s2; });
  return inst;
}

ScpInstance make_scp_instance(const Network& net, const TripleSet& triples) {
  int nf = static_cast<int>(net.facilities.size());
  int nc = static_cast<int>(net.customers.size());
  std::vector<int> self(nc);
  for (int u = 0; u < nc; ++u)
    self[u] = net.facility_index(net.customers[u]);
  std::vector<ScpTriple> local;
  local.reserve(triples.size());
  std::vector<int> cust_index(net.vertex_count, -1);
  for (int u = 0; u < nc; ++u) cust_index[net.customers[u]] = u;
  for (const Triple& t : triples.by_customer)
    local.push_back(ScpTriple{cust_index[t.c], net.facility_index(t.f1),
                              net.facility_index(t.f2)});
  ScpInstance inst = make_scp_instance(nc, nf, std::move(self),
                                       std::move(local));
  inst.facility_vertex = net.facilities;
  inst.customer_vertex = net.customers;
  inst.mode = triples.mode;
  inst.from_set_disjoint_network = triples.mode == TripleMode::set_disjoint;
  return inst;
}

std::vector<int> cover_vertices(const ScpInstance& inst,
                                const std::vector<int>& cover) {
  std::vector<int> out;
  out.reserve(cover.size());
  for (int s : cover)
    out.push_back(inst.facility_vertex.empty() ? s : inst.facility_vertex[s]);
  std::sort(out.begin(), out.end());
  return out;
}

CoverCheck validate_cover(const ScpInstance& inst,
                          const std::vector<int>& cover) {
  std::vector<std::uint8_t> chosen(inst.num_facilities, 0);
  for (int s : cover) chosen[s] = 1;
  for (int u = 0; u < inst.num_customers; ++u) {
    int self = inst.self_facility[u];
    if (self >= 0 && chosen[self]) continue;
    bool covered = false;
    for (std::size_t i = inst.u_start[u]; i < inst.u_start[u + 1]; ++i)
      if (chosen[inst.by_u[i].s1] && chosen[inst.by_u[i].s2]) {
        covered = true;
        break;
      }
    if (!covered) return CoverCheck{false, u};
  }
  return CoverCheck{true, -1};
}

std::string format_solution(const ScpInstance& inst,
                            const std::vector<int>& cover,
                            const std::vector<std::string>& comments) {
  std::ostringstream out;
  for (const std::string& c : comments) out << "# " << c << '\n';
  out << "s " << cover.size() << '\n';
  for (int v : cover_vertices(inst, cover)) out << "v " << v << '\n';
  return out.str();
}

}  // namespace paircover
