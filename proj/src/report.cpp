#include "paircover/report.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <sstream>
#include <stdexcept>

namespace paircover {

std::string instance_hash(const Network& net) {
  std::string text = save_network(net);
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  char buf[24];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(h));
  return buf;
}

std::vector<std::pair<int, int>> size_histogram(const std::vector<int>& sizes) {
  std::map<int, int> counts;
  for (int s : sizes) counts[s]++;
  return {counts.begin(), counts.end()};
}

std::string format_report(const SolveReport& r) {
  std::ostringstream out;
  out << "instance=" << r.instance << '\n';
  out << "class=" << r.class_label << '\n';
  out << "mode=" << r.mode << '\n';
  out << "algorithm=" << r.algorithm << '\n';
  out << "seed=" << r.seed << '\n';
  out << "customers=" << r.customers << '\n';
  out << "facilities=" << r.facilities << '\n';
  out << "triples=" << r.triples << '\n';
  out << "cover_size=" << r.cover_size << '\n';
  out << "cover=";
  for (std::size_t i = 0; i < r.cover.size(); ++i)
    out << (i ? " " : "") << r.cover[i];
  out << '\n';
  out << "iterations=" << r.iterations << '\n';
  out << "best_iteration=" << r.best_iteration << '\n';
  out << "histogram=";
  for (std::size_t i = 0; i < r.histogram.size(); ++i)
    out << (i ? " " : "") << r.histogram[i].first << ':'
        << r.histogram[i].second;
  out << '\n';
  if (r.hslb >= 0) {
    out << "hslb=" << r.hslb << '\n';
    out << "hslb_feasible=" << (r.hslb_feasible ? "yes" : "no") << '\n';
  }
  if (r.updfl >= 0) out << "updfl=" << r.updfl << '\n';
  out << "status=" << r.status << '\n';
  out << "instance_hash=" << r.instance_hash << '\n';
  return out.str();
}

SolveReport parse_report(const std::string& text) {
  SolveReport r;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("report line missing '=': " + line);
    std::string key = line.substr(0, eq);
    std::string value = line.substr(eq + 1);
    if (key == "instance") {
      r.instance = value;
    } else if (key == "class") {
      r.class_label = value;
    } else if (key == "mode") {
      r.mode = value;
    } else if (key == "algorithm") {
      r.algorithm = value;
    } else if (key == "seed") {
      r.seed = std::stoull(value);
    } else if (key == "customers") {
      r.customers = std::stoi(value);
    } else if (key == "facilities") {
      r.facilities = std::stoi(value);
    } else if (key == "triples") {
      r.triples = std::stoull(value);
    } else if (key == "cover_size") {
      r.cover_size = std::stoi(value);
    } else if (key == "cover") {
      std::istringstream vs(value);
      int v;
      while (vs >> v) r.cover.push_back(v);
    } else if (key == "iterations") {
      r.iterations = std::stoi(value);
    } else if (key == "best_iteration") {
      r.best_iteration = std::stoi(value);
    } else if (key == "histogram") {
      std::istringstream vs(value);
      std::string tok;
      while (vs >> tok) {
        auto colon = tok.find(':');
        if (colon == std::string::npos)
          throw std::invalid_argument("bad histogram entry: " + tok);
        r.histogram.emplace_back(std::stoi(tok.substr(0, colon)),
                                 std::stoi(tok.substr(colon + 1)));
      }
    } else if (key == "hslb") {
      r.hslb = std::stoi(value);
    } else if (key == "hslb_feasible") {
      r.hslb_feasible = value == "yes";
    } else if (key == "updfl") {
      r.updfl = std::stoi(value);
    } else if (key == "status") {
      r.status = value;
    } else if (key == "instance_hash") {
      r.instance_hash = value;
    } else {
      throw std::invalid_argument("unknown report key: " + key);
    }
  }
  return r;
}

std::string render_cost_table(const std::vector<SolveReport>& reports) {
  if (reports.empty()) throw std::invalid_argument("no reports to aggregate");
  // (class, algorithm) -> mode -> percentages.
  std::map<std::pair<std::string, std::string>,
           std::map<std::string, std::vector<double>>>
      groups;
  for (const SolveReport& r : reports) {
    if (r.customers <= 0)
      throw std::invalid_argument("report with no customers: " + r.instance);
    groups[{r.class_label, r.algorithm}][r.mode].push_back(
        100.0 * r.cover_size / r.customers);
  }
  static const char* mode_order[] = {"set", "path-vertex", "path-arc"};
  std::ostringstream out;
  out << "class algorithm";
  for (const char* m : mode_order) out << ' ' << m;
  out << '\n';
  char buf[64];
  for (const auto& [key, by_mode] : groups) {
    out << key.first << ' ' << key.second;
    double set_avg = -1;
    if (auto it = by_mode.find("set"); it != by_mode.end()) {
      double sum = 0;
      for (double p : it->second) sum += p;
      set_avg = sum / it->second.size();
    }
    for (const char* m : mode_order) {
      auto it = by_mode.find(m);
      if (it == by_mode.end()) {
        out << " -";
        continue;
      }
      double sum = 0;
      for (double p : it->second) sum += p;
      double avg = sum / it->second.size();
      std::snprintf(buf, sizeof(buf), " %.1f", avg);
      out << buf;
      if (set_avg > 0 && std::string(m) != "set") {
        std::snprintf(buf, sizeof(buf), " (%.1f)",
                      100.0 * (set_avg - avg) / set_avg);
        out << buf;
      }
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace paircover
