#include "paircover/hitting.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <sstream>
#include <stdexcept>

#include "paircover/greedy.hpp"

namespace paircover {

HittingSetInstance build_hslb_instance(const Network& net) {
  HittingSetInstance hs;
  hs.num_facilities = static_cast<int>(net.facilities.size());
  hs.facility_vertex = net.facilities;
  for (int c : net.customers) {
    NeighborSets ns = neighbor_sets(net, c);
    int cf = net.facility_index(c);
    for (int ai = net.out_start[c]; ai < net.out_start[c + 1]; ++ai) {
      int x = net.arcs[ai].head;
      auto it = std::lower_bound(ns.neighbor_ids.begin(),
                                 ns.neighbor_ids.end(), x);
      int bit = (it != ns.neighbor_ids.end() && *it == x)
                    ? static_cast<int>(it - ns.neighbor_ids.begin())
                    : -1;
      std::vector<int> hit;
      for (int f = 0; f < hs.num_facilities; ++f) {
        if (f == cf) {
          hit.push_back(f);
          continue;
        }
        bool on_path =
            bit >= 0 && (ns.row(f)[bit >> 6] >> (bit & 63)) & 1;
        if (!on_path) hit.push_back(f);
      }
      hs.elements.emplace_back(c, x);
      hs.hitters.push_back(std::move(hit));
    }
  }
  return hs;
}

std::vector<int> greedy_hitting_set(const HittingSetInstance& hs,
                                    SplitMix64* rng) {
  std::size_t ne = hs.elements.size();
  std::vector<std::vector<int>> of_facility(hs.num_facilities);
  for (std::size_t e = 0; e < ne; ++e)
    for (int f : hs.hitters[e]) of_facility[f].push_back(static_cast<int>(e));
  std::vector<int> count(hs.num_facilities, 0);
  for (int f = 0; f < hs.num_facilities; ++f)
    count[f] = static_cast<int>(of_facility[f].size());
  std::vector<std::uint8_t> hit(ne, 0);
  std::vector<std::uint8_t> chosen(hs.num_facilities, 0);
  std::size_t remaining = ne;
  std::vector<int> out;
  while (remaining > 0) {
    int best = -1;
    std::uint64_t seen = 0;
    for (int f = 0; f < hs.num_facilities; ++f) {
      if (chosen[f] || count[f] == 0) continue;
      if (best < 0 || count[f] > count[best]) {
        best = f;
        seen = 1;
      } else if (count[f] == count[best]) {
        ++seen;
        if (rng && rng->next_below(seen) == 0) best = f;
      }
    }
    if (best < 0)
      throw std::logic_error("hitting-set element with empty hitter set");
    chosen[best] = 1;
    out.push_back(best);
    for (int e : of_facility[best]) {
      if (hit[e]) continue;
      hit[e] = 1;
      --remaining;
      for (int f : hs.hitters[e])
        if (!chosen[f]) count[f]--;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

constexpr int kHitWords = 4;  // 256 facilities

struct HitMask {
  std::array<std::uint64_t, kHitWords> w{};

  bool intersects(const HitMask& o) const {
    for (int i = 0; i < kHitWords; ++i)
      if (w[i] & o.w[i]) return true;
    return false;
  }
  HitMask and_not(const HitMask& o) const {
    HitMask r;
    for (int i = 0; i < kHitWords; ++i) r.w[i] = w[i] & ~o.w[i];
    return r;
  }
  bool empty() const {
    for (std::uint64_t x : w)
      if (x) return false;
    return true;
  }
  bool subset_of(const HitMask& o) const {
    for (int i = 0; i < kHitWords; ++i)
      if (w[i] & ~o.w[i]) return false;
    return true;
  }
  int count() const {
    int n = 0;
    for (std::uint64_t x : w) n += std::popcount(x);
    return n;
  }
  void set(int bit) { w[bit >> 6] |= std::uint64_t{1} << (bit & 63); }
  bool test(int bit) const {
    return (w[bit >> 6] >> (bit & 63)) & 1;
  }
  void operator|=(const HitMask& o) {
    for (int i = 0; i < kHitWords; ++i) w[i] |= o.w[i];
  }
  friend bool operator==(const HitMask&, const HitMask&) = default;
  friend auto operator<=>(const HitMask&, const HitMask&) = default;
};

struct HitBb {
  std::vector<HitMask> elems;
  int best = 0;
  HitMask best_mask;
  std::uint64_t nodes = 0;
  std::uint64_t budget = 0;
  bool exceeded = false;

  int packing_bound(const std::vector<HitMask>& avail) const {
    HitMask taken;
    int packed = 0;
    for (const HitMask& a : avail)
      if (!a.intersects(taken)) {
        ++packed;
        taken |= a;
      }
    return packed;
  }

  void rec(HitMask chosen, int count, HitMask banned) {
    if (exceeded) return;
    if (++nodes > budget) {
      exceeded = true;
      return;
    }
    std::vector<HitMask> avail;
    HitMask tightest;
    int tight_bits = 64 * kHitWords + 1;
    for (const HitMask& e : elems) {
      if (e.intersects(chosen)) continue;
      HitMask a = e.and_not(banned);
      if (a.empty()) return;  // dead branch
      avail.push_back(a);
      int b = a.count();
      if (b < tight_bits) {
        tight_bits = b;
        tightest = a;
      }
    }
    if (avail.empty()) {
      if (count < best) {
        best = count;
        best_mask = chosen;
      }
      return;
    }
    if (count + packing_bound(avail) >= best) return;
    for (int bit = 0; bit < 64 * kHitWords; ++bit) {
      if (!tightest.test(bit)) continue;
      HitMask next = chosen;
      next.set(bit);
      rec(next, count + 1, banned);
      banned.set(bit);
    }
  }
};

}  // namespace

ExactHittingResult exact_hitting_set(const HittingSetInstance& hs,
                                     std::uint64_t node_budget, int size_cap) {
  if (size_cap > 64 * kHitWords) size_cap = 64 * kHitWords;
  if (hs.num_facilities > size_cap)
    throw std::invalid_argument(
        "too many facilities for exact hitting set (cap " +
        std::to_string(size_cap) + "); export the LP and solve externally");
  HitBb bb;
  bb.budget = node_budget;
  bb.elems.reserve(hs.elements.size());
  for (const auto& h : hs.hitters) {
    HitMask m;
    for (int f : h) m.set(f);
    bb.elems.push_back(m);
  }
  std::sort(bb.elems.begin(), bb.elems.end());
  bb.elems.erase(std::unique(bb.elems.begin(), bb.elems.end()),
                 bb.elems.end());
  // Drop elements whose hitter set contains another element's (dominated).
  std::vector<HitMask> kept;
  for (const HitMask& e : bb.elems) {
    bool dominated = false;
    for (const HitMask& other : bb.elems)
      if (other != e && other.subset_of(e)) {
        dominated = true;
        break;
      }
    if (!dominated) kept.push_back(e);
  }
  bb.elems = std::move(kept);

  std::vector<int> greedy = greedy_hitting_set(hs, nullptr);
  bb.best = static_cast<int>(greedy.size());
  for (int f : greedy) bb.best_mask.set(f);
  bb.rec(HitMask{}, 0, HitMask{});

  ExactHittingResult res;
  res.value = bb.best;
  res.nodes = bb.nodes;
  res.status = bb.exceeded ? SolveStatus::budget_exceeded
                           : SolveStatus::optimal;
  for (int f = 0; f < hs.num_facilities; ++f)
    if (bb.best_mask.test(f)) res.hitting_set.push_back(f);
  return res;
}

std::string format_hslb_line(int value, bool feasible) {
  std::ostringstream out;
  out << "hslb " << value << " feasible=" << (feasible ? "yes" : "no");
  return out.str();
}

int GoodnessTable::t_good_count(int t) const {
  int n = 0;
  for (const auto& g : good)
    if (static_cast<int>(g.size()) >= t) ++n;
  return n;
}

std::vector<int> GoodnessTable::t_good_customers(int t) const {
  std::vector<int> out;
  for (int u = 0; u < static_cast<int>(good.size()); ++u)
    if (static_cast<int>(good[u].size()) >= t) out.push_back(u);
  return out;
}

GoodnessTable goodness_table(const Network& net) {
  GoodnessTable table;
  int nc = static_cast<int>(net.customers.size());
  int nf = static_cast<int>(net.facilities.size());
  table.good.resize(nc);
  table.via.resize(nc);
  for (int u = 0; u < nc; ++u) {
    int c = net.customers[u];
    NeighborSets ns = neighbor_sets(net, c);
    for (int f = 0; f < nf; ++f) {
      if (net.facilities[f] == c) continue;
      if (ns.popcount(f) != 1) continue;
      table.good[u].push_back(f);
      table.via[u].push_back(ns.neighbors_of(f)[0]);
    }
  }
  return table;
}

namespace {

// Customer u (index) covered by the chosen facility flags.
bool customer_covered(const ScpInstance& inst,
                      const std::vector<std::uint8_t>& chosen, int u) {
  int self = inst.self_facility[u];
  if (self >= 0 && chosen[self]) return true;
  for (std::size_t i = inst.u_start[u]; i < inst.u_start[u + 1]; ++i)
    if (chosen[inst.by_u[i].s1] && chosen[inst.by_u[i].s2]) return true;
  return false;
}

std::vector<int> extend_and_minimalize(const ScpInstance& inst,
                                       const std::vector<int>& initial,
                                       int iteration, SplitMix64& rng) {
  GreedyResult g = greedy_construct_from(inst, initial, rng);
  DeleteMode mode =
      iteration % 2 == 0 ? DeleteMode::reverse : DeleteMode::random;
  return minimalize(inst, g.add_order, mode, rng, nullptr);
}

void require_set_disjoint(const ScpInstance& inst, const char* who) {
  if (!inst.from_set_disjoint_network)
    throw std::invalid_argument(std::string(who) +
                                " requires set-disjoint triples");
}

}  // namespace

HittingHeuristicResult shs(const Network& net, const ScpInstance& inst,
                           int iterations, std::uint64_t base_seed) {
  require_set_disjoint(inst, "shs");
  if (iterations < 1) throw std::invalid_argument("iterations must be >= 1");
  HittingSetInstance hs = build_hslb_instance(net);
  HittingHeuristicResult res;
  int best_size = inst.num_facilities + 1;
  for (int i = 0; i < iterations; ++i) {
    SplitMix64 rng(base_seed + static_cast<std::uint64_t>(i));
    std::vector<int> x = greedy_hitting_set(hs, &rng);
    std::vector<int> cover = extend_and_minimalize(inst, x, i, rng);
    res.iterations.push_back(HittingIterationStats{
        static_cast<int>(x.size()), static_cast<int>(x.size()),
        static_cast<int>(cover.size())});
    if (static_cast<int>(cover.size()) < best_size) {
      best_size = static_cast<int>(cover.size());
      res.best_cover = std::move(cover);
      res.best_iteration = i;
    }
  }
  return res;
}

HittingHeuristicResult dhs(const Network& net, const ScpInstance& inst, int t,
                           int iterations, std::uint64_t base_seed) {
  require_set_disjoint(inst, "dhs");
  if (iterations < 1) throw std::invalid_argument("iterations must be >= 1");
  if (t < 1 || t > inst.num_facilities)
    throw std::invalid_argument("t out of range");
  GoodnessTable table = goodness_table(net);
  std::vector<int> ct = table.t_good_customers(t);

  HittingHeuristicResult res;
  res.t_good_count = static_cast<int>(ct.size());
  int best_size = inst.num_facilities + 1;

  // Neighbor sets per customer, shared across iterations.
  std::vector<NeighborSets> ns;
  ns.reserve(net.customers.size());
  for (int c : net.customers) ns.push_back(neighbor_sets(net, c));

  // Step-(i) system: S_c = {c} plus the good facilities for c.
  HittingSetInstance first;
  first.num_facilities = inst.num_facilities;
  for (int u : ct) {
    std::vector<int> s = table.good[u];
    s.push_back(inst.self_facility[u]);
    std::sort(s.begin(), s.end());
    first.elements.emplace_back(net.customers[u], -1);
    first.hitters.push_back(std::move(s));
  }

  for (int i = 0; i < iterations; ++i) {
    SplitMix64 rng(base_seed + static_cast<std::uint64_t>(i));
    std::vector<int> x;
    std::vector<int> y;
    if (!ct.empty()) {
      x = greedy_hitting_set(first, &rng);
      std::vector<std::uint8_t> in_x(inst.num_facilities, 0);
      for (int f : x) in_x[f] = 1;

      HittingSetInstance second;
      second.num_facilities = inst.num_facilities;
      for (std::size_t k = 0; k < ct.size(); ++k) {
        int u = ct[k];
        if (customer_covered(inst, in_x, u)) continue;
        // Lowest-index facility of X within S_c; good for c since c is not
        // in X here.
        int fc = -1;
        for (int f : first.hitters[k])
          if (in_x[f]) {
            fc = f;
            break;
          }
        int pos = static_cast<int>(
            std::find(table.good[u].begin(), table.good[u].end(), fc) -
            table.good[u].begin());
        int xc = table.via[u][pos];
        const NeighborSets& row = ns[u];
        auto it = std::lower_bound(row.neighbor_ids.begin(),
                                   row.neighbor_ids.end(), xc);
        int bit = static_cast<int>(it - row.neighbor_ids.begin());
        std::vector<int> fcset;
        for (int f = 0; f < inst.num_facilities; ++f) {
          if (f == inst.self_facility[u]) {
            fcset.push_back(f);
            continue;
          }
          bool through_xc = (row.row(f)[bit >> 6] >> (bit & 63)) & 1;
          if (!through_xc) fcset.push_back(f);
        }
        second.elements.emplace_back(net.customers[u], xc);
        second.hitters.push_back(std::move(fcset));
      }
      if (!second.elements.empty()) y = greedy_hitting_set(second, &rng);

      std::vector<std::uint8_t> in_xy = in_x;
      for (int f : y) in_xy[f] = 1;
      for (int u : ct)
        if (!customer_covered(inst, in_xy, u))
          throw std::logic_error("X u Y fails to cover a t-good customer");
    }

    std::vector<int> xy = x;
    for (int f : y)
      if (std::find(xy.begin(), xy.end(), f) == xy.end()) xy.push_back(f);
    std::vector<int> cover = extend_and_minimalize(inst, xy, i, rng);
    res.iterations.push_back(HittingIterationStats{
        static_cast<int>(x.size()), static_cast<int>(xy.size()),
        static_cast<int>(cover.size())});
    if (static_cast<int>(cover.size()) < best_size) {
      best_size = static_cast<int>(cover.size());
      res.best_cover = std::move(cover);
      res.best_iteration = i;
    }
  }
  return res;
}

}  // namespace paircover
