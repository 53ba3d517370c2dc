#include "doctest.h"
#include "helpers.hpp"
#include "paircover/report.hpp"
#include "paircover/stats.hpp"

using namespace paircover;

TEST_CASE("failure probability closed form") {
  CHECK(format_probability(robustness_failure_prob(1, 400, 100)) ==
        "0.77855704");
  CHECK(format_probability(robustness_failure_prob(5, 400, 400)) ==
        "0.00652893");
  CHECK(robustness_failure_prob(400, 400, 1) == 0.0);
  CHECK(robustness_failure_prob(0, 400, 7) == 1.0);
  CHECK_THROWS(robustness_failure_prob(-1, 400, 1));
  CHECK_THROWS(robustness_failure_prob(401, 400, 1));
}

TEST_CASE("report files round trip losslessly") {
  SolveReport r;
  r.instance = "foo.net";
  r.class_label = "C1,F1";
  r.mode = "set";
  r.algorithm = "greedy";
  r.seed = 42;
  r.customers = 100;
  r.facilities = 100;
  r.triples = 999;
  r.cover_size = 16;
  r.cover = {1, 5, 9};
  r.iterations = 400;
  r.best_iteration = 3;
  r.histogram = {{16, 390}, {17, 10}};
  r.hslb = 16;
  r.hslb_feasible = true;
  r.updfl = 2;
  r.instance_hash = "00ff";
  std::string text = format_report(r);
  CHECK(format_report(parse_report(text)) == text);
  SolveReport back = parse_report(text);
  CHECK(back.cover == r.cover);
  CHECK(back.histogram == r.histogram);
  CHECK(back.hslb_feasible);
}

TEST_CASE("cost table arithmetic") {
  SolveReport a;
  a.class_label = "C1,F1";
  a.algorithm = "greedy";
  a.mode = "set";
  a.customers = 100;
  a.cover_size = 16;
  SolveReport b = a;
  b.mode = "path-vertex";
  b.cover_size = 15;
  std::string table = render_cost_table({a, b});
  CHECK(table.find("C1,F1 greedy 16.0 15.0 (6.2) -") != std::string::npos);
  CHECK_THROWS(render_cost_table({}));
}

TEST_CASE("instance hash is stable and content sensitive") {
  SplitMix64 rng(91);
  Network net = testutil::random_symmetric_network(rng);
  CHECK(instance_hash(net) == instance_hash(net));
  Network other = testutil::random_symmetric_network(rng);
  CHECK(instance_hash(net) != instance_hash(other));
}

TEST_CASE("histogram aggregation") {
  CHECK(size_histogram({3, 2, 3, 3}) ==
        std::vector<std::pair<int, int>>{{2, 1}, {3, 3}});
}
