#pragma once

#include <string>
#include <vector>

#include "paircover/graph.hpp"

namespace paircover {

// Machine-readable solve record, one key=value per line. No timing fields:
// report files must be byte-identical across reruns and job counts.
struct SolveReport {
  std::string instance;    // file path or fixture tag
  std::string class_label; // grouping key for aggregation (e.g. C1,F1)
  std::string mode;        // set | path-vertex | path-arc
  std::string algorithm;
  std::uint64_t seed = 0;
  int customers = 0;
  int facilities = 0;
  std::size_t triples = 0;
  int cover_size = 0;
  std::vector<int> cover;  // vertex ids, ascending
  int iterations = 0;
  int best_iteration = 0;
  std::vector<std::pair<int, int>> histogram;  // (size, count), ascending
  int hslb = -1;           // -1 = not computed
  bool hslb_feasible = false;
  int updfl = -1;
  std::string status = "ok";
  std::string instance_hash;
};

std::string format_report(const SolveReport& r);
SolveReport parse_report(const std::string& text);

// FNV-1a over the canonical instance text, hex encoded.
std::string instance_hash(const Network& net);

std::vector<std::pair<int, int>> size_histogram(const std::vector<int>& sizes);

// Table-style aggregation: per (class, algorithm), the mean cover size as a
// percentage of |C| for each mode, with the percentage reduction relative to
// the set-disjoint column in parentheses.
std::string render_cost_table(const std::vector<SolveReport>& reports);

}  // namespace paircover
