#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <algorithm>
#include <cstdint>
#include <string>
#include <tuple>
#include <vector>

#include "paircover/bounds_special.hpp"
#include "paircover/exact.hpp"
#include "paircover/genetic.hpp"
#include "paircover/greedy.hpp"
#include "paircover/hitting.hpp"
#include "paircover/instance_gen.hpp"
#include "paircover/stats.hpp"
#include "paircover/triples.hpp"

namespace py = pybind11;
using namespace paircover;

namespace {

// Covers cross the boundary as vertex ids; instances built here always come
// from a network, so the mapping is total.
std::vector<int> to_vertices(const ScpInstance& inst,
                             const std::vector<int>& cover) {
  return cover_vertices(inst, cover);
}

std::vector<int> to_indices(const ScpInstance& inst,
                            const std::vector<int>& vertices) {
  std::vector<int> idx;
  for (int v : vertices) {
    auto it = std::find(inst.facility_vertex.begin(),
                        inst.facility_vertex.end(), v);
    if (it == inst.facility_vertex.end())
      throw std::invalid_argument("vertex " + std::to_string(v) +
                                  " is not a facility");
    idx.push_back(static_cast<int>(it - inst.facility_vertex.begin()));
  }
  std::sort(idx.begin(), idx.end());
  return idx;
}

const char* status_name(SolveStatus s) {
  return s == SolveStatus::optimal ? "optimal" : "budget_exceeded";
}

}  // namespace

PYBIND11_MODULE(_paircover, m) {
  m.doc() = "pair-cover solver core";

  py::register_exception<NetworkError>(m, "NetworkError");
  py::register_exception<InfeasibleError>(m, "InfeasibleError");

  py::class_<Network>(m, "Network")
      .def_readonly("vertex_count", &Network::vertex_count)
      .def_readonly("customers", &Network::customers)
      .def_readonly("facilities", &Network::facilities)
      .def_property_readonly(
          "arc_count", [](const Network& n) { return n.arcs.size(); })
      .def_property_readonly(
          "symmetric",
          [](const Network& n) { return check_symmetric(n).symmetric; })
      .def("save", &save_network_file, py::arg("path"))
      .def("saves", [](const Network& n) { return save_network(n); })
      .def_static("load", &load_network_file, py::arg("path"))
      .def_static("loads", &load_network_string, py::arg("text"))
      .def("__repr__", [](const Network& n) {
        return "<Network vertices=" + std::to_string(n.vertex_count) +
               " customers=" + std::to_string(n.customers.size()) +
               " facilities=" + std::to_string(n.facilities.size()) + ">";
      });

  py::class_<ScpInstance>(m, "Instance")
      .def_readonly("num_customers", &ScpInstance::num_customers)
      .def_readonly("num_facilities", &ScpInstance::num_facilities)
      .def_property_readonly("triple_count", &ScpInstance::triple_count)
      .def_property_readonly(
          "mode", [](const ScpInstance& i) { return to_string(i.mode); })
      .def("validate_cover",
           [](const ScpInstance& inst, const std::vector<int>& vertices) {
             return validate_cover(inst, to_indices(inst, vertices)).valid;
           },
           py::arg("cover"));

  m.def(
      "make_network",
      [](int vertex_count,
         const std::vector<std::tuple<int, int, std::int64_t>>& arcs,
         std::vector<int> customers, std::vector<int> facilities) {
        std::vector<Arc> a;
        for (auto [t, h, w] : arcs) a.push_back(Arc{t, h, w});
        return make_network(vertex_count, std::move(a), std::move(customers),
                            std::move(facilities));
      },
      py::arg("vertex_count"), py::arg("arcs"), py::arg("customers"),
      py::arg("facilities"));

  m.def(
      "build_instance",
      [](const Network& net, const std::string& mode) {
        return make_scp_instance(net,
                                 gen_triples(net, triple_mode_from_string(mode)));
      },
      py::arg("network"), py::arg("mode") = "set");

  m.def(
      "generate",
      [](int transit_domains, int transit_per_domain, int stub_domains,
         int stub_per_domain, const std::string& weights, std::uint64_t seed) {
        GenParams p;
        p.transit_domains = transit_domains;
        p.transit_per_domain = transit_per_domain;
        p.stub_domains = stub_domains;
        p.stub_per_domain = stub_per_domain;
        p.weight_mode = weights == "uniform" ? WeightMode::uniform_1_30
                                             : WeightMode::unit;
        p.rng_seed = seed;
        return gen_transit_stub(p);
      },
      py::arg("transit_domains") = 1, py::arg("transit_per_domain") = 2,
      py::arg("stub_domains") = 3, py::arg("stub_per_domain") = 8,
      py::arg("weights") = "unit", py::arg("seed") = 0);

  m.def(
      "sample_cf",
      [](const Network& net, int x, int y, std::uint64_t seed) {
        SplitMix64 rng(seed);
        return sample_cf(net, x, y, rng);
      },
      py::arg("network"), py::arg("x"), py::arg("y"), py::arg("seed") = 0);

  m.def(
      "solve_greedy",
      [](const ScpInstance& inst, int iterations, std::uint64_t seed,
         int jobs) {
        MultiResult r = greedy_multi(inst, iterations, seed, jobs);
        return to_vertices(inst, r.best_cover);
      },
      py::arg("instance"), py::arg("iterations") = 400, py::arg("seed") = 0,
      py::arg("jobs") = 1);

  m.def(
      "solve_genetic",
      [](const ScpInstance& inst, std::uint64_t seed, int population,
         int stall_limit) {
        GaParams p;
        p.rng_seed = seed;
        p.population = population;
        p.stall_limit = stall_limit;
        return to_vertices(inst, evolve(inst, p).best_cover);
      },
      py::arg("instance"), py::arg("seed") = 0, py::arg("population") = 0,
      py::arg("stall_limit") = 0);

  m.def(
      "solve_shs",
      [](const Network& net, const ScpInstance& inst, int iterations,
         std::uint64_t seed) {
        return to_vertices(inst, shs(net, inst, iterations, seed).best_cover);
      },
      py::arg("network"), py::arg("instance"), py::arg("iterations") = 400,
      py::arg("seed") = 0);

  m.def(
      "solve_dhs",
      [](const Network& net, const ScpInstance& inst, int t, int iterations,
         std::uint64_t seed) {
        if (t == 0) t = std::max(1, inst.num_facilities / 2);
        return to_vertices(inst,
                           dhs(net, inst, t, iterations, seed).best_cover);
      },
      py::arg("network"), py::arg("instance"), py::arg("t") = 0,
      py::arg("iterations") = 400, py::arg("seed") = 0);

  m.def(
      "solve_exact",
      [](const ScpInstance& inst, std::uint64_t budget, const Network* net) {
        ExactResult r = solve_exact(inst, budget, net);
        py::dict out;
        out["cover"] = to_vertices(inst, r.cover);
        out["status"] = status_name(r.status);
        out["nodes"] = r.nodes;
        out["root_lower_bound"] = r.root_lower_bound;
        return out;
      },
      py::arg("instance"), py::arg("budget") = 10'000'000,
      py::arg("network") = nullptr);

  m.def("export_lp", &export_mip_lp, py::arg("instance"));

  m.def(
      "hslb",
      [](const Network& net, std::uint64_t budget) {
        HittingSetInstance hs = build_hslb_instance(net);
        ExactHittingResult r = exact_hitting_set(hs, budget);
        if (r.status != SolveStatus::optimal)
          throw std::runtime_error("hitting-set budget exceeded");
        ScpInstance inst = make_scp_instance(net, gen_set_disjoint(net));
        py::dict out;
        out["value"] = r.value;
        out["feasible"] = validate_cover(inst, r.hitting_set).valid;
        out["witness"] = to_vertices(inst, r.hitting_set);
        return out;
      },
      py::arg("network"), py::arg("budget") = 50'000'000);

  m.def(
      "updfl",
      [](const Network& net) {
        UpdflBound b = updfl_lower_bound(net);
        return py::make_tuple(b.value, b.witness);
      },
      py::arg("network"));

  m.def("tree_optimum", &tree_optimum, py::arg("network"));

  m.def("failure_probability", &robustness_failure_prob, py::arg("k"),
        py::arg("runs"), py::arg("n"));
}
