#include "paircover/graph.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <limits>
#include <queue>
#include <sstream>
#include <tuple>

namespace paircover {
namespace {

bool sorted_contains(const std::vector<int>& v, int x) {
  return std::binary_search(v.begin(), v.end(), x);
}

void reach_sweep(int n, const std::vector<Arc>& arcs,
                 const std::vector<int>& out_start, int source,
                 std::vector<std::uint8_t>& seen) {
  seen.assign(n, 0);
  std::vector<int> stack{source};
  seen[source] = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int a = out_start[u]; a < out_start[u + 1]; ++a) {
      int v = arcs[a].head;
      if (!seen[v]) {
        seen[v] = 1;
        stack.push_back(v);
      }
    }
  }
}

}  // namespace

bool Network::is_customer(int v) const { return sorted_contains(customers, v); }
bool Network::is_facility(int v) const { return sorted_contains(facilities, v); }

int Network::facility_index(int v) const {
  auto it = std::lower_bound(facilities.begin(), facilities.end(), v);
  if (it == facilities.end() || *it != v) return -1;
  return static_cast<int>(it - facilities.begin());
}

Network make_network(int vertex_count, std::vector<Arc> arcs,
                     std::vector<int> customers, std::vector<int> facilities) {
  if (vertex_count <= 0) throw NetworkError("vertex count must be positive");
  for (const Arc& a : arcs) {
    if (a.tail < 0 || a.tail >= vertex_count || a.head < 0 ||
        a.head >= vertex_count)
      throw NetworkError("arc endpoint out of range: " +
                         std::to_string(a.tail) + " -> " +
                         std::to_string(a.head));
    if (a.tail == a.head)
      throw NetworkError("self-loop arc at vertex " + std::to_string(a.tail));
    if (a.weight < 1)
      throw NetworkError("non-positive weight on arc " +
                         std::to_string(a.tail) + " -> " +
                         std::to_string(a.head));
  }
  std::sort(arcs.begin(), arcs.end(), [](const Arc& x, const Arc& y) {
    return std::tie(x.tail, x.head) < std::tie(y.tail, y.head);
  });
  for (std::size_t i = 1; i < arcs.size(); ++i)
    if (arcs[i].tail == arcs[i - 1].tail && arcs[i].head == arcs[i - 1].head)
      throw NetworkError("duplicate arc " + std::to_string(arcs[i].tail) +
                         " -> " + std::to_string(arcs[i].head));

  std::sort(customers.begin(), customers.end());
  customers.erase(std::unique(customers.begin(), customers.end()),
                  customers.end());
  std::sort(facilities.begin(), facilities.end());
  facilities.erase(std::unique(facilities.begin(), facilities.end()),
                   facilities.end());
  for (int f : facilities)
    if (f < 0 || f >= vertex_count)
      throw NetworkError("facility id out of range: " + std::to_string(f));
  for (int c : customers)
    if (!std::binary_search(facilities.begin(), facilities.end(), c))
      throw NetworkError("customer " + std::to_string(c) +
                         " is not a facility (C must be a subset of F)");

  Network net;
  net.vertex_count = vertex_count;
  net.arcs = std::move(arcs);
  net.customers = std::move(customers);
  net.facilities = std::move(facilities);
  net.out_start.assign(vertex_count + 1, 0);
  for (const Arc& a : net.arcs) net.out_start[a.tail + 1]++;
  for (int v = 0; v < vertex_count; ++v)
    net.out_start[v + 1] += net.out_start[v];

  // Strong connectivity: forward reach from 0 plus reach in the reverse graph.
  std::vector<std::uint8_t> seen;
  reach_sweep(vertex_count, net.arcs, net.out_start, 0, seen);
  for (int v = 0; v < vertex_count; ++v)
    if (!seen[v]) throw NetworkError("not strongly connected");
  std::vector<Arc> rev(net.arcs.size());
  std::vector<int> rev_start(vertex_count + 1, 0);
  for (const Arc& a : net.arcs) rev_start[a.head + 1]++;
  for (int v = 0; v < vertex_count; ++v) rev_start[v + 1] += rev_start[v];
  {
    std::vector<int> fill = rev_start;
    for (const Arc& a : net.arcs)
      rev[fill[a.head]++] = Arc{a.head, a.tail, a.weight};
  }
  reach_sweep(vertex_count, rev, rev_start, 0, seen);
  for (int v = 0; v < vertex_count; ++v)
    if (!seen[v]) throw NetworkError("not strongly connected");
  return net;
}

Network load_network(std::istream& in) {
  std::string line;
  int lineno = 0;
  int n = -1;
  std::size_t m = 0;
  std::vector<Arc> arcs;
  std::vector<int> customers, facilities;
  bool have_c = false, have_f = false;

  auto fail = [&](const std::string& msg) -> void {
    throw NetworkError("line " + std::to_string(lineno) + ": " + msg);
  };

  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;
    if (tag == "p") {
      std::string kind;
      if (!(ls >> kind >> n >> m) || kind != "dpfl")
        fail("expected 'p dpfl <vertices> <arcs>'");
      if (n <= 0) fail("vertex count must be positive");
    } else if (tag == "a") {
      Arc a;
      if (!(ls >> a.tail >> a.head >> a.weight)) fail("malformed arc line");
      arcs.push_back(a);
    } else if (tag == "c") {
      have_c = true;
      int v;
      while (ls >> v) customers.push_back(v);
    } else if (tag == "f") {
      have_f = true;
      int v;
      while (ls >> v) facilities.push_back(v);
    } else {
      fail("unknown line tag '" + tag + "'");
    }
  }
  lineno++;
  if (n < 0) fail("missing 'p dpfl' header");
  if (arcs.size() != m)
    fail("arc count mismatch: header says " + std::to_string(m) + ", found " +
         std::to_string(arcs.size()));
  if (!have_c) fail("missing 'c' customer line");
  if (!have_f) fail("missing 'f' facility line");
  return make_network(n, std::move(arcs), std::move(customers),
                      std::move(facilities));
}

Network load_network_string(const std::string& text) {
  std::istringstream in(text);
  return load_network(in);
}

Network load_network_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw NetworkError("cannot open instance file: " + path);
  return load_network(in);
}

std::string save_network(const Network& net) {
  std::ostringstream out;
  out << "p dpfl " << net.vertex_count << ' ' << net.arcs.size() << '\n';
  for (const Arc& a : net.arcs)
    out << "a " << a.tail << ' ' << a.head << ' ' << a.weight << '\n';
  out << 'c';
  for (int v : net.customers) out << ' ' << v;
  out << '\n';
  out << 'f';
  for (int v : net.facilities) out << ' ' << v;
  out << '\n';
  return out.str();
}

void save_network_file(const Network& net, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw NetworkError("cannot write instance file: " + path);
  out << save_network(net);
}

ShortestPathDag shortest_path_dag(const Network& net, int source) {
  if (source < 0 || source >= net.vertex_count)
    throw NetworkError("invalid source vertex " + std::to_string(source));
  const std::int64_t inf = std::numeric_limits<std::int64_t>::max();
  ShortestPathDag dag;
  dag.source = source;
  dag.dist.assign(net.vertex_count, inf);
  dag.in_dag.assign(net.arcs.size(), 0);

  using Entry = std::pair<std::int64_t, int>;  // (dist, vertex); id breaks ties
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
  dag.dist[source] = 0;
  heap.emplace(0, source);
  std::vector<std::uint8_t> done(net.vertex_count, 0);
  while (!heap.empty()) {
    auto [d, u] = heap.top();
    heap.pop();
    if (done[u]) continue;
    done[u] = 1;
    for (int a = net.out_start[u]; a < net.out_start[u + 1]; ++a) {
      std::int64_t nd = d + net.arcs[a].weight;
      if (nd < dag.dist[net.arcs[a].head]) {
        dag.dist[net.arcs[a].head] = nd;
        heap.emplace(nd, net.arcs[a].head);
      }
    }
  }
  for (std::size_t a = 0; a < net.arcs.size(); ++a) {
    const Arc& arc = net.arcs[a];
    if (dag.dist[arc.tail] != inf &&
        dag.dist[arc.tail] + arc.weight == dag.dist[arc.head])
      dag.in_dag[a] = 1;
  }
  dag.order.resize(net.vertex_count);
  for (int v = 0; v < net.vertex_count; ++v) dag.order[v] = v;
  std::sort(dag.order.begin(), dag.order.end(), [&](int x, int y) {
    return std::tie(dag.dist[x], x) < std::tie(dag.dist[y], y);
  });
  return dag;
}

bool NeighborSets::disjoint(int fi, int fj) const {
  const std::uint64_t* a = row(fi);
  const std::uint64_t* b = row(fj);
  for (int w = 0; w < words; ++w)
    if (a[w] & b[w]) return false;
  return true;
}

int NeighborSets::popcount(int fi) const {
  const std::uint64_t* a = row(fi);
  int total = 0;
  for (int w = 0; w < words; ++w) total += std::popcount(a[w]);
  return total;
}

std::vector<int> NeighborSets::neighbors_of(int facility_index) const {
  std::vector<int> out;
  const std::uint64_t* a = row(facility_index);
  for (std::size_t i = 0; i < neighbor_ids.size(); ++i)
    if (a[i >> 6] & (std::uint64_t{1} << (i & 63)))
      out.push_back(neighbor_ids[i]);
  return out;
}

NeighborSets neighbor_sets(const Network& net, int c) {
  return neighbor_sets(net, c, shortest_path_dag(net, c));
}

NeighborSets neighbor_sets(const Network& net, int c,
                           const ShortestPathDag& dag) {
  NeighborSets ns;
  ns.customer = c;
  std::vector<int> local(net.vertex_count, -1);
  for (int a = net.out_start[c]; a < net.out_start[c + 1]; ++a) {
    if (!dag.in_dag[a]) continue;
    local[net.arcs[a].head] = static_cast<int>(ns.neighbor_ids.size());
    ns.neighbor_ids.push_back(net.arcs[a].head);
  }
  ns.words = static_cast<int>((ns.neighbor_ids.size() + 63) / 64);
  if (ns.words == 0) ns.words = 1;
  ns.masks.assign(static_cast<std::size_t>(net.facilities.size()) * ns.words,
                  0);

  // Reverse DAG adjacency for the backward sweeps.
  std::vector<int> rev_start(net.vertex_count + 1, 0);
  std::vector<int> rev_head(net.arcs.size());
  {
    std::vector<int> count(net.vertex_count + 1, 0);
    for (std::size_t a = 0; a < net.arcs.size(); ++a)
      if (dag.in_dag[a]) count[net.arcs[a].head + 1]++;
    for (int v = 0; v < net.vertex_count; ++v)
      rev_start[v + 1] = rev_start[v] + count[v + 1];
    std::vector<int> fill(rev_start.begin(), rev_start.end() - 1);
    for (std::size_t a = 0; a < net.arcs.size(); ++a)
      if (dag.in_dag[a]) rev_head[fill[net.arcs[a].head]++] = net.arcs[a].tail;
  }

  std::vector<std::uint8_t> seen(net.vertex_count, 0);
  std::vector<int> stack;
  std::vector<int> touched;
  for (std::size_t fi = 0; fi < net.facilities.size(); ++fi) {
    int f = net.facilities[fi];
    if (f == c) continue;  // N(c,c) stays empty
    stack.assign(1, f);
    seen[f] = 1;
    touched.assign(1, f);
    std::uint64_t* mask = ns.masks.data() + fi * ns.words;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      if (local[v] >= 0) mask[local[v] >> 6] |= std::uint64_t{1}
                                                << (local[v] & 63);
      for (int r = rev_start[v]; r < rev_start[v + 1]; ++r) {
        int u = rev_head[r];
        if (u == c || seen[u]) continue;
        seen[u] = 1;
        touched.push_back(u);
        stack.push_back(u);
      }
    }
    for (int v : touched) seen[v] = 0;
  }
  return ns;
}

SymmetryReport check_symmetric(const Network& net) {
  SymmetryReport rep;
  for (const Arc& a : net.arcs) {
    auto lo = net.arcs.begin() + net.out_start[a.head];
    auto hi = net.arcs.begin() + net.out_start[a.head + 1];
    auto it = std::lower_bound(lo, hi, a.tail, [](const Arc& x, int tail) {
      return x.head < tail;
    });
    if (it == hi || it->head != a.tail || it->weight != a.weight) {
      rep.symmetric = false;
      rep.violations.push_back(a);
    }
  }
  return rep;
}

std::vector<int> hop_distances(const Network& net, int source) {
  std::vector<int> dist(net.vertex_count, -1);
  std::vector<int> queue{source};
  dist[source] = 0;
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    int u = queue[qi];
    for (int a = net.out_start[u]; a < net.out_start[u + 1]; ++a) {
      int v = net.arcs[a].head;
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

}  // namespace paircover
