#include "paircover/bounds_special.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "paircover/exact.hpp"
#include "paircover/hitting.hpp"
#include "paircover/scp.hpp"
#include "paircover/triples.hpp"

namespace paircover {
namespace {

struct UndirectedView {
  int n = 0;
  std::vector<std::pair<int, int>> edges;              // a < b
  std::vector<std::vector<std::pair<int, int>>> adj;   // (other, edge id)
};

UndirectedView undirected_view(const Network& net) {
  SymmetryReport sym = check_symmetric(net);
  if (!sym.symmetric)
    throw NetworkError("operation requires a symmetric network");
  UndirectedView v;
  v.n = net.vertex_count;
  v.adj.resize(v.n);
  for (const Arc& a : net.arcs)
    if (a.tail < a.head) {
      int eid = static_cast<int>(v.edges.size());
      v.edges.emplace_back(a.tail, a.head);
      v.adj[a.tail].emplace_back(a.head, eid);
      v.adj[a.head].emplace_back(a.tail, eid);
    }
  return v;
}

// Lowpoint DFS over the alive subgraph; blocks come out as edge-id groups.
struct Decomposition {
  std::vector<std::vector<int>> block_edges;
  std::vector<std::uint8_t> is_articulation;
};

Decomposition decompose(const UndirectedView& v,
                        const std::vector<std::uint8_t>& alive) {
  Decomposition d;
  d.is_articulation.assign(v.n, 0);
  std::vector<int> disc(v.n, -1), low(v.n, 0);
  std::vector<int> edge_stack;
  int timer = 0;

  struct Frame {
    int vertex;
    int parent_edge;
    std::size_t next;
    int children = 0;
  };
  std::vector<Frame> stack;

  auto emit_block = [&](int until_edge) {
    std::vector<int> block;
    while (!edge_stack.empty()) {
      int e = edge_stack.back();
      edge_stack.pop_back();
      block.push_back(e);
      if (e == until_edge) break;
    }
    d.block_edges.push_back(std::move(block));
  };

  for (int root = 0; root < v.n; ++root) {
    if (!alive[root] || disc[root] >= 0) continue;
    stack.push_back(Frame{root, -1, 0});
    disc[root] = low[root] = timer++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      if (f.next < v.adj[f.vertex].size()) {
        auto [to, eid] = v.adj[f.vertex][f.next++];
        if (!alive[to] || eid == f.parent_edge) continue;
        if (disc[to] < 0) {
          edge_stack.push_back(eid);
          disc[to] = low[to] = timer++;
          f.children++;
          stack.push_back(Frame{to, eid, 0});
        } else if (disc[to] < disc[f.vertex]) {
          edge_stack.push_back(eid);
          low[f.vertex] = std::min(low[f.vertex], disc[to]);
        }
      } else {
        Frame done = f;
        stack.pop_back();
        if (!stack.empty()) {
          Frame& p = stack.back();
          low[p.vertex] = std::min(low[p.vertex], low[done.vertex]);
          if (low[done.vertex] >= disc[p.vertex]) {
            emit_block(done.parent_edge);
            if (p.parent_edge >= 0 || p.children > 1)
              d.is_articulation[p.vertex] = 1;
          }
        }
      }
    }
  }
  return d;
}

std::vector<int> block_vertices(const UndirectedView& v,
                                const std::vector<int>& edge_ids) {
  std::vector<int> out;
  for (int e : edge_ids) {
    out.push_back(v.edges[e].first);
    out.push_back(v.edges[e].second);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Arc> symmetric_unit_arcs(
    const std::vector<std::pair<int, int>>& edges) {
  std::vector<Arc> arcs;
  for (auto [a, b] : edges) {
    arcs.push_back(Arc{a, b, 1});
    arcs.push_back(Arc{b, a, 1});
  }
  return arcs;
}

}  // namespace

BlockTree biconnected_components(const Network& net) {
  UndirectedView v = undirected_view(net);
  std::vector<std::uint8_t> alive(v.n, 1);
  Decomposition d = decompose(v, alive);
  BlockTree tree;
  for (const auto& block : d.block_edges) {
    if (block.size() == 1) {
      tree.bridges.push_back(v.edges[block[0]]);
      continue;
    }
    std::vector<std::pair<int, int>> edges;
    for (int e : block) edges.push_back(v.edges[e]);
    std::sort(edges.begin(), edges.end());
    tree.components.push_back(block_vertices(v, block));
    tree.component_edges.push_back(std::move(edges));
  }
  std::sort(tree.bridges.begin(), tree.bridges.end());
  for (int u = 0; u < v.n; ++u)
    if (d.is_articulation[u]) tree.articulation_points.push_back(u);
  return tree;
}

std::vector<int> tree_optimum(const Network& net) {
  UndirectedView v = undirected_view(net);
  if (static_cast<int>(v.edges.size()) != v.n - 1)
    throw NetworkError("tree_optimum requires a tree");
  std::vector<std::uint8_t> is_cust(v.n, 0);
  for (int c : net.customers) is_cust[c] = 1;
  std::vector<int> degree(v.n, 0);
  for (auto [a, b] : v.edges) {
    degree[a]++;
    degree[b]++;
  }
  std::vector<std::uint8_t> alive(v.n, 1);
  std::vector<int> queue;
  for (int u = 0; u < v.n; ++u)
    if (degree[u] <= 1 && !is_cust[u]) queue.push_back(u);
  while (!queue.empty()) {
    int u = queue.back();
    queue.pop_back();
    if (!alive[u]) continue;
    alive[u] = 0;
    for (auto [to, eid] : v.adj[u])
      if (alive[to] && --degree[to] <= 1 && !is_cust[to])
        queue.push_back(to);
  }
  std::vector<int> out;
  for (int u = 0; u < v.n; ++u)
    if (alive[u] && degree[u] <= 1) out.push_back(u);
  return out;
}

UpdflBound updfl_lower_bound(const Network& net) {
  if (net.customers.empty())
    throw NetworkError("updfl bound needs at least one customer");
  UndirectedView v = undirected_view(net);
  std::vector<std::uint8_t> is_cust(v.n, 0);
  for (int c : net.customers) is_cust[c] = 1;

  std::vector<std::uint8_t> alive(v.n, 1);
  auto degree_of = [&](int u) {
    int deg = 0;
    for (auto [to, eid] : v.adj[u])
      if (alive[to]) ++deg;
    return deg;
  };

  Decomposition d;
  while (true) {
    // Strip non-customer leaves.
    std::vector<int> queue;
    for (int u = 0; u < v.n; ++u)
      if (alive[u] && !is_cust[u] && degree_of(u) <= 1) queue.push_back(u);
    while (!queue.empty()) {
      int u = queue.back();
      queue.pop_back();
      if (!alive[u]) continue;
      alive[u] = 0;
      for (auto [to, eid] : v.adj[u])
        if (alive[to] && !is_cust[to] && degree_of(to) <= 1)
          queue.push_back(to);
    }
    // Remove leaf components without internal customers.
    d = decompose(v, alive);
    bool changed = false;
    for (const auto& block : d.block_edges) {
      if (block.size() < 2) continue;
      std::vector<int> verts = block_vertices(v, block);
      int art_count = 0;
      bool internal_customer = false;
      for (int u : verts) {
        if (d.is_articulation[u])
          ++art_count;
        else if (is_cust[u])
          internal_customer = true;
      }
      if (art_count != 1 || internal_customer) continue;
      for (int u : verts)
        if (!d.is_articulation[u]) {
          alive[u] = 0;
          changed = true;
        }
    }
    if (!changed) break;
  }

  std::vector<int> residual;
  for (int u = 0; u < v.n; ++u)
    if (alive[u]) residual.push_back(u);

  UpdflBound bound;
  if (residual.size() == 1) {
    bound.witness = residual;
    bound.value = 1;
    return bound;
  }

  std::vector<int> leaves;
  for (int u : residual)
    if (degree_of(u) <= 1) leaves.push_back(u);
  std::vector<std::vector<int>> leaf_components;
  for (const auto& block : d.block_edges) {
    if (block.size() < 2) continue;
    std::vector<int> verts = block_vertices(v, block);
    int art_count = 0;
    for (int u : verts)
      if (d.is_articulation[u]) ++art_count;
    if (art_count == 1) leaf_components.push_back(std::move(verts));
  }

  if (leaves.empty() && leaf_components.empty()) {
    // Residual is 2-connected.
    std::vector<int> cust;
    for (int u : residual)
      if (is_cust[u]) cust.push_back(u);
    if (cust.size() == 1)
      bound.witness = {cust[0]};
    else
      bound.witness = {cust[0], cust[1]};
  } else {
    bound.witness = leaves;
    for (const auto& verts : leaf_components)
      for (int u : verts)
        if (!d.is_articulation[u] && is_cust[u]) {
          bound.witness.push_back(u);
          break;
        }
    std::sort(bound.witness.begin(), bound.witness.end());
    bound.witness.erase(
        std::unique(bound.witness.begin(), bound.witness.end()),
        bound.witness.end());
  }
  bound.value = static_cast<int>(bound.witness.size());
  return bound;
}

Network build_hslb_gap_fixture(int n) {
  if (n < 4) throw std::invalid_argument("fixture needs n >= 4");
  // Hubs 0..2, gates 3..5, customers 6..n+5. Hub i skips gate i; every
  // customer touches every gate.
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (j != i) edges.emplace_back(i, 3 + j);
  for (int c = 0; c < n; ++c)
    for (int j = 0; j < 3; ++j) edges.emplace_back(3 + j, 6 + c);
  std::vector<int> customers, facilities = {0, 1, 2};
  for (int c = 0; c < n; ++c) {
    customers.push_back(6 + c);
    facilities.push_back(6 + c);
  }
  Network net = make_network(n + 6, symmetric_unit_arcs(edges), customers,
                             facilities);

  ExactHittingResult h = exact_hitting_set(build_hslb_instance(net));
  TripleSet triples = gen_triples(net, TripleMode::set_disjoint);
  ScpInstance inst = make_scp_instance(net, triples);
  CoverCheck witness = validate_cover(inst, h.hitting_set);
  ExactResult opt = solve_exact(inst);
  if (h.status != SolveStatus::optimal || h.value != 3 || witness.valid ||
      opt.status != SolveStatus::optimal ||
      static_cast<int>(opt.cover.size()) != n)
    throw std::logic_error("gap fixture self-check failed (n=" +
                           std::to_string(n) + ")");
  return net;
}

Network build_updfl_gap_fixture(int N) {
  if (N < 2) throw std::invalid_argument("fixture needs N >= 2");
  // Top 0, bottom 1; per lane k: customer, gate, five detour vertices. The
  // only length-2 routes to a lane customer run through its gate; the
  // detour gives an unconstrained vertex-disjoint alternative.
  int top = 0, bottom = 1;
  std::vector<std::pair<int, int>> edges;
  std::vector<int> customers = {top, bottom};
  for (int k = 0; k < N; ++k) {
    int c = 2 + 7 * k, gate = c + 1, p = c + 2;  // p..p+4 detour
    customers.push_back(c);
    edges.emplace_back(top, p);
    for (int i = 0; i < 4; ++i) edges.emplace_back(p + i, p + i + 1);
    edges.emplace_back(p + 4, c);
    edges.emplace_back(top, gate);
    edges.emplace_back(gate, c);
    edges.emplace_back(bottom, gate);
  }
  std::sort(customers.begin(), customers.end());
  Network net = make_network(7 * N + 2, symmetric_unit_arcs(edges), customers,
                             customers);

  if (net.vertex_count != 7 * N + 2)
    throw std::logic_error("gate fixture vertex count off");
  UpdflBound b = updfl_lower_bound(net);
  TripleSet triples = gen_triples(net, TripleMode::path_vertex_disjoint);
  bool middle_covered_by_pair = false;
  for (const Triple& t : triples.by_customer)
    if (t.c != top && t.c != bottom) middle_covered_by_pair = true;
  if (b.value != 2 || middle_covered_by_pair)
    throw std::logic_error("gate fixture self-check failed (N=" +
                           std::to_string(N) + ")");
  return net;
}

}  // namespace paircover
