#include "paircover/instance_gen.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace paircover {
namespace {

constexpr int kMaxAttempts = 1000;

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
  bool connected(const std::vector<int>& members) {
    for (int m : members)
      if (find(m) != find(members[0])) return false;
    return true;
  }
};

// Random edges inside one vertex group, redrawn until connected.
void connect_group(const std::vector<int>& members, double prob,
                   SplitMix64& rng, std::set<std::pair<int, int>>& edges,
                   const char* what) {
  if (members.size() <= 1) return;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    std::vector<std::pair<int, int>> drawn;
    UnionFind uf(static_cast<int>(members.size()));
    for (std::size_t i = 0; i < members.size(); ++i)
      for (std::size_t j = i + 1; j < members.size(); ++j)
        if (rng.next_unit_open() < prob) {
          drawn.emplace_back(members[i], members[j]);
          uf.unite(static_cast<int>(i), static_cast<int>(j));
        }
    bool ok = true;
    for (std::size_t i = 1; i < members.size(); ++i)
      if (uf.find(static_cast<int>(i)) != uf.find(0)) {
        ok = false;
        break;
      }
    if (ok) {
      edges.insert(drawn.begin(), drawn.end());
      return;
    }
  }
  throw std::runtime_error(std::string("could not connect ") + what +
                           " after " + std::to_string(kMaxAttempts) +
                           " attempts; raise the edge probability");
}

}  // namespace

Network gen_transit_stub(const GenParams& p) {
  if (p.transit_domains < 1 || p.transit_per_domain < 1 ||
      p.stub_domains < 1 || p.stub_per_domain < 1)
    throw std::invalid_argument("domain counts must be >= 1");
  if (p.intra_transit_prob < 0 || p.intra_transit_prob > 1 ||
      p.intra_stub_prob < 0 || p.intra_stub_prob > 1)
    throw std::invalid_argument("probabilities must lie in [0,1]");
  SplitMix64 rng(p.rng_seed);

  int transit_total = p.transit_domains * p.transit_per_domain;
  // Vertices [0, transit_total) are transit; one per domain is pinned, the
  // rest land in random domains.
  std::vector<std::vector<int>> domain(p.transit_domains);
  for (int d = 0; d < p.transit_domains; ++d) domain[d].push_back(d);
  for (int v = p.transit_domains; v < transit_total; ++v)
    domain[rng.next_below(p.transit_domains)].push_back(v);

  std::set<std::pair<int, int>> edges;
  for (int d = 0; d < p.transit_domains; ++d)
    connect_group(domain[d], p.intra_transit_prob, rng, edges,
                  "a transit domain");

  if (p.transit_domains > 1) {
    int backbone = std::max(
        p.transit_domains - 1,
        static_cast<int>(
            std::lround(p.mean_transit_edges * p.transit_domains / 2.0)));
    bool ok = false;
    for (int attempt = 0; attempt < kMaxAttempts && !ok; ++attempt) {
      std::vector<std::pair<int, int>> drawn;
      UnionFind uf(p.transit_domains);
      for (int e = 0; e < backbone; ++e) {
        int da = static_cast<int>(rng.next_below(p.transit_domains));
        int db = static_cast<int>(rng.next_below(p.transit_domains - 1));
        if (db >= da) ++db;
        int va = domain[da][rng.next_below(domain[da].size())];
        int vb = domain[db][rng.next_below(domain[db].size())];
        drawn.emplace_back(std::min(va, vb), std::max(va, vb));
        uf.unite(da, db);
      }
      ok = true;
      for (int d = 1; d < p.transit_domains; ++d)
        if (uf.find(d) != uf.find(0)) ok = false;
      if (ok) edges.insert(drawn.begin(), drawn.end());
    }
    if (!ok)
      throw std::runtime_error(
          "could not connect the transit backbone after " +
          std::to_string(kMaxAttempts) + " attempts");
  }

  int next = transit_total;
  for (int tv = 0; tv < transit_total; ++tv) {
    for (int s = 0; s < p.stub_domains; ++s) {
      std::vector<int> members(p.stub_per_domain);
      std::iota(members.begin(), members.end(), next);
      next += p.stub_per_domain;
      connect_group(members, p.intra_stub_prob, rng, edges, "a stub domain");
      int gateway = members[rng.next_below(members.size())];
      edges.emplace(tv, gateway);
    }
  }

  std::vector<Arc> arcs;
  for (auto [a, b] : edges) {
    std::int64_t w = p.weight_mode == WeightMode::unit
                         ? 1
                         : static_cast<std::int64_t>(1 + rng.next_below(30));
    arcs.push_back(Arc{a, b, w});
    arcs.push_back(Arc{b, a, w});
  }
  return make_network(next, std::move(arcs), {}, {});
}

DemandMatrix gravitational_demands_core(const Network& net,
                                        const std::vector<double>& o,
                                        const std::vector<double>& d,
                                        const std::vector<double>& r) {
  int n = net.vertex_count;
  DemandMatrix dm;
  dm.n = n;
  dm.demand.assign(static_cast<std::size_t>(n) * n, 0.0);
  std::vector<std::vector<int>> hops(n);
  for (int u = 0; u < n; ++u) {
    hops[u] = hop_distances(net, u);
    for (int v = 0; v < n; ++v) dm.dmax = std::max(dm.dmax, hops[u][v]);
  }
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      if (u == v) continue;
      double e = std::exp(-static_cast<double>(hops[u][v]) / dm.dmax);
      dm.demand[static_cast<std::size_t>(u) * n + v] =
          r[static_cast<std::size_t>(u) * n + v] * o[u] * d[v] * e;
    }
  return dm;
}

DemandMatrix gravitational_demands(const Network& net, SplitMix64& rng) {
  int n = net.vertex_count;
  std::vector<double> o(n), d(n), r(static_cast<std::size_t>(n) * n, 0.0);
  for (int v = 0; v < n; ++v) o[v] = rng.next_unit_open();
  for (int v = 0; v < n; ++v) d[v] = rng.next_unit_open();
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v)
        r[static_cast<std::size_t>(u) * n + v] = rng.next_unit_open();
  return gravitational_demands_core(net, o, d, r);
}

std::string format_demands(const DemandMatrix& dm) {
  std::ostringstream out;
  char buf[64];
  for (int u = 0; u < dm.n; ++u)
    for (int v = 0; v < dm.n; ++v) {
      if (u == v) continue;
      std::snprintf(buf, sizeof(buf), "%.9g", dm.at(u, v));
      out << "d " << u << ' ' << v << ' ' << buf << '\n';
    }
  return out.str();
}

Network sample_cf(const Network& net, int x, int y, SplitMix64& rng) {
  if (y < 1 || x < y)
    throw std::invalid_argument("need x >= y >= 1 so C fits inside F");
  int n = net.vertex_count;
  auto pick = [&](std::vector<int> pool, int count) {
    for (int i = 0; i < count; ++i) {
      std::size_t j = i + rng.next_below(pool.size() - i);
      std::swap(pool[i], pool[j]);
    }
    pool.resize(count);
    std::sort(pool.begin(), pool.end());
    return pool;
  };
  int nf = (n + y - 1) / y;
  int nc = (n + x - 1) / x;
  std::vector<int> all(n);
  std::iota(all.begin(), all.end(), 0);
  std::vector<int> facilities = pick(all, nf);
  std::vector<int> customers = pick(facilities, nc);
  return make_network(n, net.arcs, std::move(customers),
                      std::move(facilities));
}

}  // namespace paircover
