#include "paircover/stats.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace paircover {

double robustness_failure_prob(int k, int R, int N) {
  if (R < 1 || k < 0 || k > R || N < 0)
    throw std::invalid_argument("need 0 <= k <= R, R >= 1, N >= 0");
  return std::pow(static_cast<double>(R - k) / R, N);
}

std::string format_probability(double p) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.8f", p);
  return buf;
}

}  // namespace paircover
