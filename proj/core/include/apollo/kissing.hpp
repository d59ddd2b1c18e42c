#pragma once

#include <optional>
#include <vector>

#include "apollo/graph.hpp"

namespace apollo {

/// k(d, alpha): the maximum number of unit balls tangent to alpha pairwise
/// tangent unit d-balls.  Known values only; everything else is unknown.
std::optional<long long> kissing_number(int d, int alpha);

struct KissingViolation {
  std::vector<int> clique;  // the K_{2+alpha} part
  long long common;         // common neighbors found
  long long bound;          // k(d-1, alpha)
  int config_dim;           // d-1
  int alpha;
};

struct KissingReport {
  std::vector<KissingViolation> violations;
  std::vector<std::pair<int, int>> unknown;  // (config_dim, alpha) without a known bound
  bool clean() const { return violations.empty(); }
};

/// Screens g for cliques whose joint neighborhood exceeds a known kissing
/// number: a (2+alpha)-clique with more than k(d-1, alpha) common neighbors
/// cannot occur in a d-ball packing.
KissingReport kissing_screen(const Graph& g, int d, std::size_t cap = 1u << 20);

}  // namespace apollo
