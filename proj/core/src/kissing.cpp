#include "apollo/kissing.hpp"

#include <map>
#include <stdexcept>

namespace apollo {

std::optional<long long> kissing_number(int d, int alpha) {
  if (d < 1 || alpha < 1 || alpha > d) return std::nullopt;
  if (alpha == d) return 2;
  if (alpha == d - 1) {
    if (d >= 4) return 4;
    if (d == 3) return 5;
    return 6;  // d == 2
  }
  if (alpha == 1) {
    static const std::map<int, long long> classic = {
        {1, 2}, {2, 6}, {3, 12}, {4, 24}, {8, 240}, {24, 196560}};
    if (auto it = classic.find(d); it != classic.end()) return it->second;
  }
  return std::nullopt;
}

KissingReport kissing_screen(const Graph& g, int d, std::size_t cap) {
  if (d < 3) throw std::invalid_argument("kissing_screen: d must be >= 3");
  KissingReport rep;
  for (int alpha = 1; alpha <= d && 2 + alpha <= g.size(); ++alpha) {
    auto bound = kissing_number(d - 1, alpha);
    if (!bound) {
      rep.unknown.emplace_back(d - 1, alpha);
      continue;
    }
    for (auto& c : cliques_of_size(g, 2 + alpha, cap)) {
      long long m = (long long)common_neighbors(g, c).size();
      if (m > *bound) rep.violations.push_back({c, m, *bound, d - 1, alpha});
    }
  }
  return rep;
}

}  // namespace apollo
