#include "paircover/triples.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <tuple>

namespace paircover {
namespace {

void finalize(TripleSet& ts, const Network& net) {
  ts.by_min = ts.by_customer;
  std::sort(ts.by_min.begin(), ts.by_min.end(),
            [](const Triple& a, const Triple& b) {
              return std::tie(a.f1, a.f2, a.c) < std::tie(b.f1, b.f2, b.c);
            });
  ts.by_max = ts.by_customer;
  std::sort(ts.by_max.begin(), ts.by_max.end(),
            [](const Triple& a, const Triple& b) {
              return std::tie(a.f2, a.f1, a.c) < std::tie(b.f2, b.f1, b.c);
            });
  auto offsets = [&](const std::vector<Triple>& v, auto key) {
    std::vector<std::size_t> start(net.vertex_count + 1, 0);
    for (const Triple& t : v) start[key(t) + 1]++;
    for (int i = 0; i < net.vertex_count; ++i) start[i + 1] += start[i];
    return start;
  };
  ts.customer_start = offsets(ts.by_customer, [](const Triple& t) { return t.c; });
  ts.min_start = offsets(ts.by_min, [](const Triple& t) { return t.f1; });
  ts.max_start = offsets(ts.by_max, [](const Triple& t) { return t.f2; });
}

}  // namespace

std::string to_string(TripleMode mode) {
  switch (mode) {
    case TripleMode::set_disjoint: return "set";
    case TripleMode::path_vertex_disjoint: return "path-vertex";
    case TripleMode::path_arc_disjoint: return "path-arc";
  }
  return "?";
}

TripleMode triple_mode_from_string(const std::string& name) {
  if (name == "set") return TripleMode::set_disjoint;
  if (name == "path-vertex") return TripleMode::path_vertex_disjoint;
  if (name == "path-arc") return TripleMode::path_arc_disjoint;
  throw std::invalid_argument("unknown triple mode: " + name);
}

TripleSet gen_set_disjoint(const Network& net) {
  TripleSet ts;
  ts.mode = TripleMode::set_disjoint;
  const auto& fac = net.facilities;
  // Two passes: the first counts, the second writes into exact-size storage.
  std::size_t total = 0;
  for (int pass = 0; pass < 2; ++pass) {
    if (pass == 1) ts.by_customer.reserve(total);
    for (int c : net.customers) {
      NeighborSets ns = neighbor_sets(net, c);
      for (std::size_t i = 0; i < fac.size(); ++i) {
        if (fac[i] == c) continue;
        for (std::size_t j = i + 1; j < fac.size(); ++j) {
          if (fac[j] == c) continue;
          if (ns.disjoint(static_cast<int>(i), static_cast<int>(j))) {
            if (pass == 0)
              ++total;
            else
              ts.by_customer.push_back(Triple{c, fac[i], fac[j]});
          }
        }
      }
    }
  }
  finalize(ts, net);
  return ts;
}

namespace {

// Unit-capacity flow graph over one customer's shortest-path DAG, with
// optional vertex splitting. Answers, for a fixed routed path to f1, which
// facilities remain residual-reachable.
class DagFlow {
 public:
  DagFlow(const Network& net, const ShortestPathDag& dag, int c, bool split)
      : net_(net), dag_(dag), c_(c), split_(split) {
    node_count_ = split ? 2 * net.vertex_count : net.vertex_count;
    // Forward arcs: DAG arcs (plus internal arcs in split mode).
    for (std::size_t a = 0; a < net.arcs.size(); ++a) {
      if (!dag.in_dag[a]) continue;
      int u = net.arcs[a].tail, v = net.arcs[a].head;
      add_arc(split ? out_node(u) : u, split ? in_node(v) : v);
    }
    if (split) {
      internal_arc_.assign(net.vertex_count, -1);
      for (int v = 0; v < net.vertex_count; ++v) {
        if (v == c) continue;
        internal_arc_[v] = add_arc(in_node(v), out_node(v));
      }
    }
    build_adjacency();
    used_.assign(from_.size(), 0);

    // DAG successor lists in ascending head order (arcs are already sorted).
    dag_next_start_.assign(net.vertex_count + 1, 0);
    for (std::size_t a = 0; a < net.arcs.size(); ++a)
      if (dag.in_dag[a]) dag_next_start_[net.arcs[a].tail + 1]++;
    for (int v = 0; v < net.vertex_count; ++v)
      dag_next_start_[v + 1] += dag_next_start_[v];
    dag_next_.resize(dag_next_start_.back());
    {
      std::vector<int> fill(dag_next_start_.begin(), dag_next_start_.end() - 1);
      for (std::size_t a = 0; a < net.arcs.size(); ++a)
        if (dag.in_dag[a]) dag_next_[fill[net.arcs[a].tail]++] = net.arcs[a].head;
    }
    // Reverse DAG adjacency for the backward reachability sweeps.
    dag_prev_start_.assign(net.vertex_count + 1, 0);
    for (std::size_t a = 0; a < net.arcs.size(); ++a)
      if (dag.in_dag[a]) dag_prev_start_[net.arcs[a].head + 1]++;
    for (int v = 0; v < net.vertex_count; ++v)
      dag_prev_start_[v + 1] += dag_prev_start_[v];
    dag_prev_.resize(dag_prev_start_.back());
    {
      std::vector<int> fill(dag_prev_start_.begin(), dag_prev_start_.end() - 1);
      for (std::size_t a = 0; a < net.arcs.size(); ++a)
        if (dag.in_dag[a]) dag_prev_[fill[net.arcs[a].head]++] = net.arcs[a].tail;
    }
    reach_.assign(net.vertex_count, 0);
    node_seen_.assign(node_count_, 0);
  }

  // Routes the lexicographically-smallest-by-vertex-id shortest path c -> f1,
  // then runs one BFS in the residual graph. Afterwards residual_reachable()
  // answers coverage for every f2 at once.
  void route_and_search(int f1) {
    // Backward reachability: which vertices can still reach f1 in the DAG.
    mark_reach(f1);
    path_nodes_.clear();
    int u = c_;
    while (u != f1) {
      int next = -1;
      for (int i = dag_next_start_[u]; i < dag_next_start_[u + 1]; ++i) {
        int v = dag_next_[i];
        if (reach_[v]) { next = v; break; }  // heads ascend, first wins
      }
      path_nodes_.push_back(next);
      u = next;
    }
    clear_reach(f1);

    // Saturate the routed path (and the vertex capacities it consumes).
    used_arcs_.clear();
    int prev = c_;
    for (int v : path_nodes_) {
      mark_used(arc_between(prev, v));
      if (split_) mark_used(internal_arc_[v]);
      prev = v;
    }

    // Residual BFS from c: forward over unused arcs, backward over used ones.
    bfs_queue_.assign(1, split_ ? out_node(c_) : c_);
    node_seen_[bfs_queue_[0]] = 1;
    seen_nodes_ = bfs_queue_;
    for (std::size_t qi = 0; qi < bfs_queue_.size(); ++qi) {
      int x = bfs_queue_[qi];
      for (int i = adj_start_[x]; i < adj_start_[x + 1]; ++i) {
        int a = adj_arc_[i];
        if (!used_[a]) visit(to_[a]);
      }
      for (int i = radj_start_[x]; i < radj_start_[x + 1]; ++i) {
        int a = radj_arc_[i];
        if (used_[a]) visit(from_[a]);
      }
    }
  }

  bool residual_reachable(int f2) const {
    return node_seen_[split_ ? out_node(f2) : f2] != 0;
  }

  void reset() {
    for (int a : used_arcs_) used_[a] = 0;
    for (int x : seen_nodes_) node_seen_[x] = 0;
  }

 private:
  int in_node(int v) const { return 2 * v; }
  int out_node(int v) const { return 2 * v + 1; }

  int add_arc(int from, int to) {
    from_.push_back(from);
    to_.push_back(to);
    return static_cast<int>(from_.size()) - 1;
  }

  void build_adjacency() {
    auto csr = [&](const std::vector<int>& endpoint, std::vector<int>& start,
                   std::vector<int>& arcs) {
      start.assign(node_count_ + 1, 0);
      for (int x : endpoint) start[x + 1]++;
      for (int v = 0; v < node_count_; ++v) start[v + 1] += start[v];
      arcs.resize(endpoint.size());
      std::vector<int> fill(start.begin(), start.end() - 1);
      for (std::size_t a = 0; a < endpoint.size(); ++a)
        arcs[fill[endpoint[a]]++] = static_cast<int>(a);
    };
    csr(from_, adj_start_, adj_arc_);
    csr(to_, radj_start_, radj_arc_);
  }

  int arc_between(int u, int v) {
    int x = split_ ? out_node(u) : u;
    int y = split_ ? in_node(v) : v;
    for (int i = adj_start_[x]; i < adj_start_[x + 1]; ++i)
      if (to_[adj_arc_[i]] == y) return adj_arc_[i];
    return -1;
  }

  void mark_used(int a) {
    used_[a] = 1;
    used_arcs_.push_back(a);
  }

  void visit(int x) {
    if (!node_seen_[x]) {
      node_seen_[x] = 1;
      seen_nodes_.push_back(x);
      bfs_queue_.push_back(x);
    }
  }

  void mark_reach(int f1) {
    reach_stack_.assign(1, f1);
    reach_[f1] = 1;
    reach_list_.assign(1, f1);
    while (!reach_stack_.empty()) {
      int v = reach_stack_.back();
      reach_stack_.pop_back();
      for (int i = dag_prev_start_[v]; i < dag_prev_start_[v + 1]; ++i) {
        int u = dag_prev_[i];
        if (!reach_[u]) {
          reach_[u] = 1;
          reach_list_.push_back(u);
          reach_stack_.push_back(u);
        }
      }
    }
  }

  void clear_reach(int) {
    for (int v : reach_list_) reach_[v] = 0;
  }

  const Network& net_;
  const ShortestPathDag& dag_;
  int c_;
  bool split_;
  int node_count_;
  std::vector<int> from_, to_;
  std::vector<int> internal_arc_;
  std::vector<int> adj_start_, adj_arc_, radj_start_, radj_arc_;
  std::vector<std::uint8_t> used_;
  std::vector<int> used_arcs_;
  std::vector<int> dag_next_start_, dag_next_;
  std::vector<int> dag_prev_start_, dag_prev_;
  std::vector<std::uint8_t> reach_;
  std::vector<int> reach_list_, reach_stack_;
  std::vector<int> path_nodes_;
  std::vector<std::uint8_t> node_seen_;
  std::vector<int> seen_nodes_, bfs_queue_;
};

}  // namespace

TripleSet gen_path_disjoint(const Network& net, PathDisjointness kind) {
  TripleSet ts;
  ts.mode = kind == PathDisjointness::vertex ? TripleMode::path_vertex_disjoint
                                             : TripleMode::path_arc_disjoint;
  const bool split = kind == PathDisjointness::vertex;
  const auto& fac = net.facilities;
  std::size_t total = 0;
  for (int pass = 0; pass < 2; ++pass) {
    if (pass == 1) ts.by_customer.reserve(total);
    for (int c : net.customers) {
      ShortestPathDag dag = shortest_path_dag(net, c);
      DagFlow flow(net, dag, c, split);
      for (std::size_t i = 0; i < fac.size(); ++i) {
        int f1 = fac[i];
        if (f1 == c) continue;
        flow.route_and_search(f1);
        for (std::size_t j = i + 1; j < fac.size(); ++j) {
          int f2 = fac[j];
          if (f2 == c) continue;
          if (flow.residual_reachable(f2)) {
            if (pass == 0)
              ++total;
            else
              ts.by_customer.push_back(Triple{c, f1, f2});
          }
        }
        flow.reset();
      }
    }
  }
  finalize(ts, net);
  return ts;
}

TripleSet gen_triples(const Network& net, TripleMode mode) {
  switch (mode) {
    case TripleMode::set_disjoint: return gen_set_disjoint(net);
    case TripleMode::path_vertex_disjoint:
      return gen_path_disjoint(net, PathDisjointness::vertex);
    case TripleMode::path_arc_disjoint:
      return gen_path_disjoint(net, PathDisjointness::arc);
  }
  throw std::invalid_argument("bad triple mode");
}

namespace {

// All shortest paths from c to f, as vertex sequences.
std::vector<std::vector<int>> enumerate_shortest_paths(const Network& net,
                                                       int c, int f) {
  ShortestPathDag dag = shortest_path_dag(net, c);
  std::vector<std::vector<int>> paths;
  std::vector<int> current{c};
  std::function<void(int)> walk = [&](int u) {
    if (u == f) {
      paths.push_back(current);
      return;
    }
    for (int a = net.out_start[u]; a < net.out_start[u + 1]; ++a) {
      if (!dag.in_dag[a]) continue;
      int v = net.arcs[a].head;
      if (dag.dist[v] > dag.dist[f]) continue;
      current.push_back(v);
      walk(v);
      current.pop_back();
    }
  };
  walk(c);
  return paths;
}

bool share_vertex_other_than(const std::vector<int>& p1,
                             const std::vector<int>& p2, int c) {
  for (int u : p1) {
    if (u == c) continue;
    for (int v : p2)
      if (u == v) return true;
  }
  return false;
}

bool share_arc(const std::vector<int>& p1, const std::vector<int>& p2) {
  for (std::size_t i = 0; i + 1 < p1.size(); ++i)
    for (std::size_t j = 0; j + 1 < p2.size(); ++j)
      if (p1[i] == p2[j] && p1[i + 1] == p2[j + 1]) return true;
  return false;
}

}  // namespace

TripleSet brute_force_triples(const Network& net, TripleMode mode,
                              int max_vertices) {
  if (net.vertex_count > max_vertices)
    throw std::invalid_argument(
        "brute_force_triples: instance too large (" +
        std::to_string(net.vertex_count) + " > " +
        std::to_string(max_vertices) + " vertices)");
  TripleSet ts;
  ts.mode = mode;
  const auto& fac = net.facilities;
  for (int c : net.customers) {
    std::vector<std::vector<std::vector<int>>> paths(fac.size());
    for (std::size_t i = 0; i < fac.size(); ++i)
      if (fac[i] != c) paths[i] = enumerate_shortest_paths(net, c, fac[i]);
    for (std::size_t i = 0; i < fac.size(); ++i) {
      if (fac[i] == c) continue;
      for (std::size_t j = i + 1; j < fac.size(); ++j) {
        if (fac[j] == c) continue;
        bool covered = false;
        if (mode == TripleMode::set_disjoint) {
          covered = true;
          for (const auto& p1 : paths[i])
            for (const auto& p2 : paths[j])
              if (share_vertex_other_than(p1, p2, c)) covered = false;
        } else {
          for (const auto& p1 : paths[i]) {
            for (const auto& p2 : paths[j]) {
              bool ok = mode == TripleMode::path_vertex_disjoint
                            ? !share_vertex_other_than(p1, p2, c)
                            : !share_arc(p1, p2);
              if (ok) { covered = true; break; }
            }
            if (covered) break;
          }
        }
        if (covered) ts.by_customer.push_back(Triple{c, fac[i], fac[j]});
      }
    }
  }
  finalize(ts, net);
  return ts;
}

TripleStats triple_stats(const TripleSet& ts, const Network& net) {
  TripleStats st;
  st.count = ts.size();
  std::size_t nc = net.customers.size();
  std::size_t nf = net.facilities.size();
  st.possible = nf >= 2 ? nc * (nf - 1) * (nf - 2) / 2 : 0;
  st.percent = st.possible == 0
                   ? 0.0
                   : 100.0 * static_cast<double>(st.count) /
                         static_cast<double>(st.possible);
  return st;
}

std::string dump_triples(const TripleSet& ts) {
  std::ostringstream out;
  out << "p triples " << to_string(ts.mode) << ' ' << ts.size() << '\n';
  for (const Triple& t : ts.by_customer)
    out << "t " << t.c << ' ' << t.f1 << ' ' << t.f2 << '\n';
  return out.str();
}

}  // namespace paircover
