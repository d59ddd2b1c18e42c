#include "apollo/builder.hpp"

#include <cmath>

namespace apollo {

namespace {

/// Balls of the orthoplex join construction, in vertex order
///   units (antipodal pairs), A, c2, B, c1
/// so that the tangency graph's non-edges are consecutive even-odd pairs.
std::vector<Ball<double>> orthoplex_balls(int d) {
  if (d < 3) throw std::invalid_argument("orthoplex join: d must be >= 3");
  std::vector<Ball<double>> balls;
  const double s = std::sqrt(2.0);
  for (int i = 0; i < d - 1; ++i)
    for (double sgn : {1.0, -1.0}) {
      VecS<double> c(d, 0.0);
      c[0] = 1.0;
      c[1 + i] = sgn * s;
      balls.push_back(make_ball(1.0, std::move(c)));
    }
  VecS<double> down(d, 0.0), up(d, 0.0);
  down[0] = -1.0;
  up[0] = 1.0;
  Ball<double> a{BallKind::halfspace, 0.0, down, 0.0};
  Ball<double> b{BallKind::halfspace, 0.0, up, 2.0};
  VecS<double> c1(d, 0.0), c2(d, 0.0);
  c1[0] = 0.5;
  c2[0] = 1.5;
  balls.push_back(a);
  balls.push_back(make_ball(2.0, std::move(c2)));
  balls.push_back(b);
  balls.push_back(make_ball(2.0, std::move(c1)));
  return balls;
}

}  // namespace

Packing<double> orthoplex_join_packing(int d, double eps) {
  return make_packing(d, orthoplex_balls(d), eps);
}

BuildResult<double> orthoplex_path4_attempt(int d, double eps) {
  BuildResult<double> res;
  auto balls = orthoplex_balls(d);
  const int n = int(balls.size());
  // vertex order for the requested graph: units, then the path c1 A B c2
  std::vector<int> order(balls.size());
  for (int i = 0; i < 2 * (d - 1); ++i) order[i] = i;
  order[2 * (d - 1) + 0] = n - 1;  // c1
  order[2 * (d - 1) + 1] = n - 4;  // A
  order[2 * (d - 1) + 2] = n - 2;  // B
  order[2 * (d - 1) + 3] = n - 3;  // c2

  const Graph expected = join(orthoplex(d - 1), path(4));
  for (int v = 0; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      auto c = contact(balls[order[u]], balls[order[v]], eps);
      const bool expect = expected.adjacent(u, v);
      if (expect != c.tangent()) {
        res.failure = detail::mismatch_failure(v, u, c.cls, expect);
        return res;
      }
      if (!expect && c.cls != ContactClass::disjoint) {
        res.failure = detail::mismatch_failure(v, u, c.cls, false);
        return res;
      }
    }
  }
  res.packing = make_packing(d, std::move(balls), eps);  // unreachable for real input
  return res;
}

}  // namespace apollo
