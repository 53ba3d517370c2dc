#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "paircover/bounds_special.hpp"
#include "paircover/exact.hpp"
#include "paircover/genetic.hpp"
#include "paircover/graph.hpp"
#include "paircover/greedy.hpp"
#include "paircover/hitting.hpp"
#include "paircover/instance_gen.hpp"
#include "paircover/report.hpp"
#include "paircover/stats.hpp"
#include "paircover/triples.hpp"

namespace pc = paircover;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitBadInstance = 2;
constexpr int kExitInfeasible = 3;

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

struct GenerateArgs {
  pc::GenParams params;
  std::string family = "transit";  // transit | hslb-gap | updfl-gap
  int gap_size = 9;
  std::string cls;  // e.g. C1,F1
  std::string stem = "instance";
  std::string weights = "unit";
  int count = 1;
  bool demands = false;
};

// C<z>,F<y> -> divisors (x=z for customers, y for facilities).
std::pair<int, int> parse_class(const std::string& cls) {
  int x = 0, y = 0;
  if (std::sscanf(cls.c_str(), "C%d,F%d", &x, &y) != 2 || x < y || y < 1)
    throw CLI::ValidationError("--class", "expected C<x>,F<y> with x >= y");
  return {x, y};
}

int cmd_generate(const GenerateArgs& a) {
  for (int i = 0; i < a.count; ++i) {
    std::uint64_t seed = a.params.rng_seed + static_cast<std::uint64_t>(i);
    pc::Network net;
    std::string name;
    if (a.family == "hslb-gap") {
      net = pc::build_hslb_gap_fixture(a.gap_size);
      name = a.stem + "_hslbgap" + std::to_string(a.gap_size) + ".net";
    } else if (a.family == "updfl-gap") {
      net = pc::build_updfl_gap_fixture(a.gap_size);
      name = a.stem + "_updflgap" + std::to_string(a.gap_size) + ".net";
    } else {
      pc::GenParams p = a.params;
      p.rng_seed = seed;
      p.weight_mode = a.weights == "uniform" ? pc::WeightMode::uniform_1_30
                                             : pc::WeightMode::unit;
      net = pc::gen_transit_stub(p);
      auto [x, y] = parse_class(a.cls.empty() ? "C1,F1" : a.cls);
      pc::SplitMix64 rng(pc::derive_seed(seed, 0x6366));  // C/F sampling
      net = pc::sample_cf(net, x, y, rng);
      name = a.stem + "_T" + std::to_string(p.transit_domains) + "_NT" +
             std::to_string(p.transit_per_domain) + "_S" +
             std::to_string(p.stub_domains) + "_NS" +
             std::to_string(p.stub_per_domain) + "_" +
             (a.cls.empty() ? "C1,F1" : a.cls) + "_seed" +
             std::to_string(seed) + ".net";
    }
    pc::save_network_file(net, name);
    if (a.demands) {
      pc::SplitMix64 rng(pc::derive_seed(seed, 0x64656d));  // demand stream
      pc::DemandMatrix dm = pc::gravitational_demands(net, rng);
      write_file(name + ".dem", pc::format_demands(dm));
    }
    std::cout << name << " vertices=" << net.vertex_count
              << " arcs=" << net.arcs.size()
              << " customers=" << net.customers.size()
              << " facilities=" << net.facilities.size() << '\n';
  }
  return kExitOk;
}

struct SolveArgs {
  std::string instance;
  std::string mode = "set";
  std::string algorithm = "greedy";
  std::string cls;
  int iterations = 400;
  std::uint64_t seed = 0;
  int jobs = 1;
  int t = 1;  // dhs threshold; 0 = floor(|F|/2)
  std::uint64_t budget = 10'000'000;
  std::string report_path;
  std::string solution_path;
  std::string lp_path;
};

struct AlgoRun {
  std::vector<int> cover;  // facility indices
  int best_iteration = 0;
  std::vector<int> sizes;
};

AlgoRun run_one(const std::string& name, int iterations,
                const pc::Network& net, const pc::ScpInstance& inst,
                const SolveArgs& a, std::uint64_t seed, pc::SolveStatus* st) {
  AlgoRun run;
  if (name == "greedy") {
    pc::MultiResult m = pc::greedy_multi(inst, iterations, seed, a.jobs);
    run.cover = m.best_cover;
    run.best_iteration = m.best_iteration;
    run.sizes = m.sizes;
  } else if (name == "genetic") {
    pc::GaParams params;
    params.rng_seed = seed;
    pc::GaResult g = pc::evolve(inst, params);
    run.cover = g.best_cover;
    for (const pc::GaGeneration& gen : g.log) run.sizes.push_back(gen.best);
  } else if (name == "shs" || name == "dhs") {
    if (a.mode != "set")
      throw CLI::ValidationError("--algorithm",
                                 name + " requires --mode set");
    pc::HittingHeuristicResult h;
    if (name == "shs") {
      h = pc::shs(net, inst, iterations, seed);
    } else {
      int t = a.t == 0 ? inst.num_facilities / 2 : a.t;
      h = pc::dhs(net, inst, t, iterations, seed);
    }
    run.cover = h.best_cover;
    run.best_iteration = h.best_iteration;
    for (const auto& it : h.iterations) run.sizes.push_back(it.final_size);
  } else if (name == "exact") {
    pc::ExactResult r = pc::solve_exact(inst, a.budget, &net);
    run.cover = r.cover;
    if (st) *st = r.status;
  } else {
    throw CLI::ValidationError("--algorithm", "unknown algorithm " + name);
  }
  return run;
}

int cmd_solve(const SolveArgs& a) {
  pc::Network net = pc::load_network_file(a.instance);
  pc::TripleMode mode = pc::triple_mode_from_string(a.mode);
  pc::TripleSet triples = pc::gen_triples(net, mode);
  pc::ScpInstance inst = pc::make_scp_instance(net, triples);

  if (!a.lp_path.empty()) pc::export_mip_lp_file(inst, a.lp_path);

  pc::SolveStatus status = pc::SolveStatus::optimal;
  AlgoRun run;
  if (a.algorithm.find(':') != std::string::npos) {
    // Portfolio: name:count+name:count..., each leg on its own seed stream.
    std::string spec = a.algorithm;
    int leg = 0;
    std::size_t pos = 0;
    bool have = false;
    while (pos < spec.size()) {
      std::size_t plus = spec.find('+', pos);
      std::string part = spec.substr(
          pos, plus == std::string::npos ? std::string::npos : plus - pos);
      std::size_t colon = part.find(':');
      if (colon == std::string::npos)
        throw CLI::ValidationError("--algorithm",
                                   "portfolio legs look like name:count");
      std::string name = part.substr(0, colon);
      int count = std::stoi(part.substr(colon + 1));
      AlgoRun r = run_one(name, count, net, inst, a,
                          pc::derive_seed(a.seed, 0x706f00 + leg), &status);
      run.sizes.insert(run.sizes.end(), r.sizes.begin(), r.sizes.end());
      if (!have || r.cover.size() < run.cover.size()) {
        run.cover = r.cover;
        have = true;
      }
      ++leg;
      pos = plus == std::string::npos ? spec.size() : plus + 1;
    }
  } else {
    run = run_one(a.algorithm, a.iterations, net, inst, a, a.seed, &status);
  }

  pc::CoverCheck check = pc::validate_cover(inst, run.cover);
  if (!check.valid) {
    std::cerr << "internal error: produced cover fails validation\n";
    return kExitInfeasible;
  }

  pc::SolveReport report;
  report.instance = a.instance;
  report.class_label = a.cls;
  report.mode = a.mode;
  report.algorithm = a.algorithm;
  report.seed = a.seed;
  report.customers = inst.num_customers;
  report.facilities = inst.num_facilities;
  report.triples = inst.triple_count();
  report.cover_size = static_cast<int>(run.cover.size());
  report.cover = pc::cover_vertices(inst, run.cover);
  report.iterations = static_cast<int>(run.sizes.size());
  report.best_iteration = run.best_iteration;
  report.histogram = pc::size_histogram(run.sizes);
  report.status = status == pc::SolveStatus::optimal ? "ok" : "budget";
  report.instance_hash = pc::instance_hash(net);

  if (a.mode == "set" && inst.num_facilities <= 256) {
    pc::HittingSetInstance hs = pc::build_hslb_instance(net);
    pc::ExactHittingResult h = pc::exact_hitting_set(hs, 2'000'000);
    if (h.status == pc::SolveStatus::optimal) {
      report.hslb = h.value;
      report.hslb_feasible = pc::validate_cover(inst, h.hitting_set).valid;
    }
  }
  if (pc::check_symmetric(net).symmetric && !net.customers.empty())
    report.updfl = pc::updfl_lower_bound(net).value;

  std::string text = pc::format_report(report);
  if (!a.report_path.empty()) write_file(a.report_path, text);
  std::cout << text;
  if (!a.solution_path.empty())
    write_file(a.solution_path,
               pc::format_solution(inst, run.cover,
                                   {"instance " + a.instance,
                                    "mode " + a.mode,
                                    "algorithm " + a.algorithm}));
  return status == pc::SolveStatus::optimal ? kExitOk : kExitInfeasible;
}

struct BoundArgs {
  std::string instance;
  std::string bound = "hslb";
  std::string lp_path;
};

int cmd_bound(const BoundArgs& a) {
  pc::Network net = pc::load_network_file(a.instance);
  if (a.bound == "hslb") {
    pc::HittingSetInstance hs = pc::build_hslb_instance(net);
    if (!a.lp_path.empty()) pc::export_hslb_lp_file(hs, a.lp_path);
    pc::ExactHittingResult h = pc::exact_hitting_set(hs);
    pc::TripleSet triples = pc::gen_triples(net, pc::TripleMode::set_disjoint);
    pc::ScpInstance inst = pc::make_scp_instance(net, triples);
    bool feasible = pc::validate_cover(inst, h.hitting_set).valid;
    std::cout << pc::format_hslb_line(h.value, feasible) << '\n';
    std::cout << "witness=";
    for (std::size_t i = 0; i < h.hitting_set.size(); ++i)
      std::cout << (i ? " " : "") << net.facilities[h.hitting_set[i]];
    std::cout << '\n';
    return h.status == pc::SolveStatus::optimal ? kExitOk : kExitInfeasible;
  }
  if (a.bound == "updfl") {
    pc::UpdflBound b = pc::updfl_lower_bound(net);
    std::cout << "updfl " << b.value << '\n';
    std::cout << "witness=";
    for (std::size_t i = 0; i < b.witness.size(); ++i)
      std::cout << (i ? " " : "") << b.witness[i];
    std::cout << '\n';
    return kExitOk;
  }
  std::cerr << "unknown bound: " << a.bound << '\n';
  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pair-cover solver toolkit"};
  app.require_subcommand(1);

  GenerateArgs gen;
  CLI::App* g = app.add_subcommand("generate", "emit synthetic instances");
  g->add_option("--T", gen.params.transit_domains, "transit domains");
  g->add_option("--NT", gen.params.transit_per_domain,
                "transit vertices per domain");
  g->add_option("--S", gen.params.stub_domains,
                "stub domains per transit vertex");
  g->add_option("--NS", gen.params.stub_per_domain,
                "vertices per stub domain");
  g->add_option("--class", gen.cls, "customer/facility class, e.g. C1,F1");
  g->add_option("--seed", gen.params.rng_seed, "base seed");
  g->add_option("--count", gen.count, "number of consecutive seeds");
  g->add_option("--stem", gen.stem, "output file stem");
  g->add_option("--weights", gen.weights, "unit | uniform")
      ->check(CLI::IsMember({"unit", "uniform"}));
  g->add_option("--family", gen.family, "transit | hslb-gap | updfl-gap")
      ->check(CLI::IsMember({"transit", "hslb-gap", "updfl-gap"}));
  g->add_option("--gap-size", gen.gap_size, "size parameter for gap families");
  g->add_flag("--demands", gen.demands, "also emit a demand matrix file");

  struct TriplesArgs {
    std::string instance;
    std::string mode = "set";
    std::string out;
  } tr;
  CLI::App* t = app.add_subcommand("triples", "build and inspect triples");
  t->add_option("--instance", tr.instance, "instance file")->required();
  t->add_option("--mode", tr.mode, "set | path-vertex | path-arc");
  t->add_option("--out", tr.out, "dump triples to a file");

  SolveArgs sol;
  CLI::App* s = app.add_subcommand("solve", "run a solver");
  s->add_option("--instance", sol.instance, "instance file")->required();
  s->add_option("--mode", sol.mode, "set | path-vertex | path-arc");
  s->add_option("--algorithm", sol.algorithm,
                "greedy | genetic | shs | dhs | exact | name:count+...");
  s->add_option("--class", sol.cls, "class label for report grouping");
  s->add_option("--iterations", sol.iterations, "iteration count");
  s->add_option("--seed", sol.seed, "base seed");
  s->add_option("--jobs", sol.jobs, "worker threads");
  s->add_option("--t", sol.t, "goodness threshold for dhs (0 = |F|/2)");
  s->add_option("--budget", sol.budget, "node budget for exact");
  s->add_option("--report", sol.report_path, "write report file");
  s->add_option("--solution", sol.solution_path, "write solution file");
  s->add_option("--export-lp", sol.lp_path, "write the LP model");

  BoundArgs bnd;
  CLI::App* b = app.add_subcommand("bound", "compute a lower bound");
  b->add_option("--instance", bnd.instance, "instance file")->required();
  b->add_option("--bound", bnd.bound, "hslb | updfl");
  b->add_option("--export-lp", bnd.lp_path, "write the hitting LP");

  struct ReportArgs {
    std::vector<std::string> files;
  } rep;
  CLI::App* r = app.add_subcommand("report", "aggregate report files");
  r->add_option("files", rep.files, "report files")->required();

  struct ProbArgs {
    int k = 0;
    int R = 400;
    int N = 0;
  } prob;
  CLI::App* p = app.add_subcommand("prob", "repeat-failure probability");
  p->add_option("--k", prob.k, "observed successes")->required();
  p->add_option("--R", prob.R, "total runs");
  p->add_option("--N", prob.N, "future runs")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (g->parsed()) return cmd_generate(gen);
    if (t->parsed()) {
      pc::Network net = pc::load_network_file(tr.instance);
      pc::TripleSet ts =
          pc::gen_triples(net, pc::triple_mode_from_string(tr.mode));
      pc::TripleStats st = pc::triple_stats(ts, net);
      char pct[32];
      std::snprintf(pct, sizeof(pct), "%.4f", st.percent);
      std::cout << "triples " << pc::to_string(ts.mode) << " count="
                << st.count << " possible=" << st.possible << " percent="
                << pct << '\n';
      if (!tr.out.empty()) write_file(tr.out, pc::dump_triples(ts));
      return kExitOk;
    }
    if (s->parsed()) return cmd_solve(sol);
    if (b->parsed()) return cmd_bound(bnd);
    if (r->parsed()) {
      std::vector<pc::SolveReport> reports;
      for (const std::string& f : rep.files) {
        std::ifstream in(f, std::ios::binary);
        if (!in) throw std::runtime_error("cannot read " + f);
        std::string text((std::istreambuf_iterator<char>(in)),
                         std::istreambuf_iterator<char>());
        reports.push_back(pc::parse_report(text));
      }
      std::cout << pc::render_cost_table(reports);
      return kExitOk;
    }
    if (p->parsed()) {
      std::cout << pc::format_probability(
                       pc::robustness_failure_prob(prob.k, prob.R, prob.N))
                << '\n';
      return kExitOk;
    }
  } catch (const pc::NetworkError& e) {
    std::cerr << "invalid instance: " << e.what() << '\n';
    return kExitBadInstance;
  } catch (const pc::InfeasibleError& e) {
    std::cerr << "infeasible: " << e.what() << '\n';
    return kExitInfeasible;
  } catch (const CLI::Error& e) {
    std::cerr << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
