#pragma once

#include <string>

namespace paircover {

// Probability that N future runs all miss, given k hits out of R:
// ((R - k) / R)^N.
double robustness_failure_prob(int k, int R, int N);

// Fixed 8-decimal rendering used by the probability tables.
std::string format_probability(double p);

}  // namespace paircover
