#include "paircover/exact.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <queue>
#include <sstream>
#include <stdexcept>

#include "paircover/greedy.hpp"

namespace paircover {
namespace {

constexpr int kInfeasible = std::numeric_limits<int>::max() / 2;

struct Node {
  std::vector<std::uint8_t> in, out;
  int in_count = 0;
  int lb = 0;
  std::uint64_t stamp = 0;
};

struct NodeOrder {
  // Best-first by lower bound; among equal bounds, newest first (DFS).
  bool operator()(const Node& a, const Node& b) const {
    if (a.lb != b.lb) return a.lb > b.lb;
    return a.stamp < b.stamp;
  }
};

class Search {
 public:
  explicit Search(const ScpInstance& inst) : inst_(inst) {}

  bool covered(const Node& n, int u) const {
    int self = inst_.self_facility[u];
    if (self >= 0 && n.in[self]) return true;
    for (std::size_t i = inst_.u_start[u]; i < inst_.u_start[u + 1]; ++i)
      if (n.in[inst_.by_u[i].s1] && n.in[inst_.by_u[i].s2]) return true;
    return false;
  }

  // Facilities (not forced out) that could still take part in covering u,
  // and whether one new facility can suffice.
  void options(const Node& n, int u, std::vector<int>& avail,
               bool& one_enough) const {
    avail.clear();
    one_enough = false;
    int self = inst_.self_facility[u];
    if (self >= 0 && !n.out[self]) {
      avail.push_back(self);
      one_enough = true;
    }
    for (std::size_t i = inst_.u_start[u]; i < inst_.u_start[u + 1]; ++i) {
      int a = inst_.by_u[i].s1, b = inst_.by_u[i].s2;
      if (n.out[a] || n.out[b]) continue;
      avail.push_back(a);
      avail.push_back(b);
      if (n.in[a] || n.in[b]) one_enough = true;
    }
    std::sort(avail.begin(), avail.end());
    avail.erase(std::unique(avail.begin(), avail.end()), avail.end());
  }

  int lower_bound(const Node& n) const {
    std::vector<std::uint8_t> used(inst_.num_facilities, 0);
    int extra = 0;
    std::vector<int> avail;
    bool one_enough;
    for (int u = 0; u < inst_.num_customers; ++u) {
      if (covered(n, u)) continue;
      options(n, u, avail, one_enough);
      if (avail.empty()) return kInfeasible;
      bool disjoint = true;
      for (int f : avail)
        if (used[f] || n.in[f]) {
          disjoint = false;
          break;
        }
      if (!disjoint) continue;
      extra += one_enough ? 1 : 2;
      for (int f : avail) used[f] = 1;
    }
    return n.in_count + extra;
  }

  int branch_facility(const Node& n) const {
    std::vector<int> score(inst_.num_facilities, 0);
    std::vector<int> avail;
    bool one_enough;
    for (int u = 0; u < inst_.num_customers; ++u) {
      if (covered(n, u)) continue;
      options(n, u, avail, one_enough);
      for (int f : avail)
        if (!n.in[f]) score[f]++;
    }
    int best = -1;
    for (int f = 0; f < inst_.num_facilities; ++f) {
      if (n.in[f] || n.out[f] || score[f] == 0) continue;
      if (best < 0 || score[f] > score[best]) best = f;
    }
    return best;
  }

 private:
  const ScpInstance& inst_;
};

}  // namespace

ExactResult solve_exact(const ScpInstance& inst, std::uint64_t node_budget,
                        const Network* net) {
  Search search(inst);
  ExactResult res;

  std::vector<int> incumbent = greedy_complete(inst, {});
  auto try_incumbent = [&](const std::vector<int>& cover) {
    if (cover.size() < incumbent.size()) incumbent = cover;
  };

  Node root;
  root.in.assign(inst.num_facilities, 0);
  root.out.assign(inst.num_facilities, 0);
  root.lb = search.lower_bound(root);
  if (root.lb >= kInfeasible) {
    for (int u = 0; u < inst.num_customers; ++u)
      if (!search.covered(root, u))
        throw InfeasibleError("instance infeasible: customer " +
                                  std::to_string(u) + " cannot be covered",
                              u);
  }
  res.root_lower_bound = root.lb;
  if (net && inst.from_set_disjoint_network &&
      inst.num_facilities <= 256) {
    ExactHittingResult h = exact_hitting_set(build_hslb_instance(*net),
                                             2'000'000);
    if (h.status == SolveStatus::optimal)
      res.root_lower_bound = std::max(res.root_lower_bound, h.value);
  }

  std::priority_queue<Node, std::vector<Node>, NodeOrder> queue;
  std::uint64_t stamp = 0;
  root.stamp = stamp++;
  root.lb = std::max(root.lb, res.root_lower_bound);
  queue.push(root);

  bool exceeded = false;
  while (!queue.empty()) {
    if (static_cast<int>(incumbent.size()) <= res.root_lower_bound) break;
    Node n = queue.top();
    queue.pop();
    if (n.lb >= static_cast<int>(incumbent.size())) continue;
    if (++res.nodes > node_budget) {
      exceeded = true;
      break;
    }

    std::vector<int> in_list;
    for (int f = 0; f < inst.num_facilities; ++f)
      if (n.in[f]) in_list.push_back(f);
    try_incumbent(greedy_complete(inst, in_list));

    bool complete = true;
    for (int u = 0; u < inst.num_customers && complete; ++u)
      if (!search.covered(n, u)) complete = false;
    if (complete) {
      try_incumbent(in_list);
      continue;
    }

    int f = search.branch_facility(n);
    if (f < 0) continue;  // uncovered customer with no options
    for (int side = 0; side < 2; ++side) {
      Node child = n;
      if (side == 0) {
        child.in[f] = 1;
        child.in_count++;
      } else {
        child.out[f] = 1;
      }
      child.lb = search.lower_bound(child);
      if (child.lb >= static_cast<int>(incumbent.size())) continue;
      child.stamp = stamp++;
      queue.push(child);
    }
  }

  res.cover = std::move(incumbent);
  res.status = exceeded ? SolveStatus::budget_exceeded : SolveStatus::optimal;
  return res;
}

std::vector<int> brute_force_optimum(const ScpInstance& inst) {
  int nf = inst.num_facilities;
  if (nf > 20)
    throw std::invalid_argument("brute force capped at 20 facilities");
  // Per customer: self bit plus the pair masks that cover it.
  std::vector<std::uint32_t> self_mask(inst.num_customers, 0);
  std::vector<std::vector<std::uint32_t>> pair_masks(inst.num_customers);
  for (int u = 0; u < inst.num_customers; ++u) {
    int s = inst.self_facility[u];
    if (s >= 0) self_mask[u] = std::uint32_t{1} << s;
    for (std::size_t i = inst.u_start[u]; i < inst.u_start[u + 1]; ++i)
      pair_masks[u].push_back((std::uint32_t{1} << inst.by_u[i].s1) |
                              (std::uint32_t{1} << inst.by_u[i].s2));
  }
  auto valid = [&](std::uint32_t m) {
    for (int u = 0; u < inst.num_customers; ++u) {
      if (self_mask[u] & m) continue;
      bool ok = false;
      for (std::uint32_t p : pair_masks[u])
        if ((p & m) == p) {
          ok = true;
          break;
        }
      if (!ok) return false;
    }
    return true;
  };
  for (int k = 0; k <= nf; ++k) {
    if (k == 0) {
      if (valid(0)) return {};
      continue;
    }
    // Gosper iteration over k-subsets in increasing numeric order.
    std::uint32_t m = (std::uint32_t{1} << k) - 1;
    std::uint32_t limit = std::uint32_t{1} << nf;
    while (m < limit) {
      if (valid(m)) {
        std::vector<int> out;
        for (int f = 0; f < nf; ++f)
          if ((m >> f) & 1) out.push_back(f);
        return out;
      }
      std::uint32_t c = m & -m;
      std::uint32_t r = m + c;
      m = (((r ^ m) >> 2) / c) | r;
    }
  }
  throw InfeasibleError("instance infeasible: no subset covers all customers",
                        -1);
}

namespace {

int facility_id(const ScpInstance& inst, int f) {
  return inst.facility_vertex.empty() ? f : inst.facility_vertex[f];
}

int customer_id(const ScpInstance& inst, int u) {
  return inst.customer_vertex.empty() ? u : inst.customer_vertex[u];
}

// Rows wrapped after a fixed number of terms to keep lines short.
void emit_terms(std::ostringstream& out, const std::vector<std::string>& terms,
                const char* tail) {
  for (std::size_t i = 0; i < terms.size(); ++i) {
    out << (i == 0 ? "" : (i % 8 == 0 ? "\n   + " : " + ")) << terms[i];
  }
  out << ' ' << tail << '\n';
}

void write_text_file(const std::string& text, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << text;
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace

std::string export_mip_lp(const ScpInstance& inst) {
  std::ostringstream out;
  out << "Minimize\n obj:";
  for (int f = 0; f < inst.num_facilities; ++f)
    out << (f == 0 ? " " : " + ") << "x_" << facility_id(inst, f);
  out << "\nSubject To\n";

  // Distinct pairs, ascending; by_s1 is sorted (s1, s2, u).
  std::vector<std::pair<int, int>> pairs;
  for (std::size_t i = 0; i < inst.by_s1.size();) {
    pairs.emplace_back(inst.by_s1[i].s1, inst.by_s1[i].s2);
    std::size_t j = i;
    while (j < inst.by_s1.size() && inst.by_s1[j].s1 == inst.by_s1[i].s1 &&
           inst.by_s1[j].s2 == inst.by_s1[i].s2)
      ++j;
    i = j;
  }
  auto y_name = [&](int a, int b) {
    return "y_" + std::to_string(facility_id(inst, a)) + "_" +
           std::to_string(facility_id(inst, b));
  };

  for (int u = 0; u < inst.num_customers; ++u) {
    std::vector<std::string> terms;
    int self = inst.self_facility[u];
    if (self >= 0)
      terms.push_back("x_" + std::to_string(facility_id(inst, self)));
    for (std::size_t i = inst.u_start[u]; i < inst.u_start[u + 1]; ++i)
      terms.push_back(y_name(inst.by_u[i].s1, inst.by_u[i].s2));
    if (terms.empty())
      throw InfeasibleError("customer " + std::to_string(u) +
                                " has no covering options",
                            u);
    out << " cov_" << customer_id(inst, u) << ":";
    out << ' ';
    emit_terms(out, terms, ">= 1");
  }
  for (auto [a, b] : pairs) {
    out << " lnka_" << facility_id(inst, a) << "_" << facility_id(inst, b)
        << ": " << y_name(a, b) << " - x_" << facility_id(inst, a)
        << " <= 0\n";
    out << " lnkb_" << facility_id(inst, a) << "_" << facility_id(inst, b)
        << ": " << y_name(a, b) << " - x_" << facility_id(inst, b)
        << " <= 0\n";
  }
  out << "Bounds\n";
  for (auto [a, b] : pairs) out << " 0 <= " << y_name(a, b) << " <= 1\n";
  out << "Binary\n";
  for (int f = 0; f < inst.num_facilities; ++f)
    out << " x_" << facility_id(inst, f) << '\n';
  out << "End\n";
  return out.str();
}

void export_mip_lp_file(const ScpInstance& inst, const std::string& path) {
  write_text_file(export_mip_lp(inst), path);
}

std::string export_hslb_lp(const HittingSetInstance& hs) {
  auto x_name = [&](int f) {
    int id = hs.facility_vertex.empty() ? f : hs.facility_vertex[f];
    return "x_" + std::to_string(id);
  };
  std::ostringstream out;
  out << "Minimize\n obj:";
  for (int f = 0; f < hs.num_facilities; ++f)
    out << (f == 0 ? " " : " + ") << x_name(f);
  out << "\nSubject To\n";
  for (std::size_t e = 0; e < hs.elements.size(); ++e) {
    auto [c, x] = hs.elements[e];
    if (c >= 0 && x >= 0)
      out << " hit_" << c << "_" << x << ":";
    else
      out << " e_" << e << ":";
    std::vector<std::string> terms;
    for (int f : hs.hitters[e]) terms.push_back(x_name(f));
    if (terms.empty())
      throw std::invalid_argument("element with empty hitter set");
    out << ' ';
    emit_terms(out, terms, ">= 1");
  }
  out << "Binary\n";
  for (int f = 0; f < hs.num_facilities; ++f) out << ' ' << x_name(f) << '\n';
  out << "End\n";
  return out.str();
}

void export_hslb_lp_file(const HittingSetInstance& hs,
                         const std::string& path) {
  write_text_file(export_hslb_lp(hs), path);
}

}  // namespace paircover
