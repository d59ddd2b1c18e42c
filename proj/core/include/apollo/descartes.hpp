#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "apollo/geometry.hpp"

namespace apollo {

/// An ordered list of d+2 pairwise tangent d-balls.  Order matters: group
/// words act on positions, and two configurations are equal only if they
/// agree ball by ball.
template <typename S>
struct DescartesConfig {
  int dim = 0;
  std::vector<Ball<S>> balls;

  int size() const { return int(balls.size()); }
};

/// Q_d = I - (1/d) e e^T, size (d+2) x (d+2).
template <typename S>
Mat<S> q_matrix(int d) {
  if (d < 2) throw std::invalid_argument("q_matrix: d must be >= 2");
  const int n = d + 2;
  const S off = S(-1) / S(d);
  Mat<S> q(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) q(i, j) = (i == j) ? S(1) + off : off;
  return q;
}

/// Rows are the curvature-center coordinates of the balls, shape (d+2) x (d+1).
template <typename S>
Mat<S> curvature_center_matrix(const DescartesConfig<S>& cfg) {
  Mat<S> m(cfg.size(), cfg.dim + 1);
  for (int i = 0; i < cfg.size(); ++i) m.set_row(i, curvature_center(cfg.balls[i]));
  return m;
}

template <typename S>
struct BadPair {
  int i, j;
  ContactClass cls;
};

template <typename S>
struct ValidationReport {
  S eq1_residual{};  // |sum k^2 - (sum k)^2/d| / (1 + sum k^2)
  S eq2_residual{};  // max-norm of M^T Q M - diag(0, 2I)
  std::vector<BadPair<S>> bad_pairs;

  bool valid(double eps) const {
    return bad_pairs.empty() && to_double(eq1_residual) <= eps && to_double(eq2_residual) <= eps;
  }
};

template <typename S>
ValidationReport<S> validate(const DescartesConfig<S>& cfg, double eps = default_tolerance()) {
  ValidationReport<S> rep;
  const int n = cfg.size();
  if (n != cfg.dim + 2) throw std::invalid_argument("descartes: expected d+2 balls");

  S sum{}, sum2{};
  for (const auto& b : cfg.balls) {
    sum += b.curvature;
    sum2 += b.curvature * b.curvature;
  }
  S resid = sum2 - (sum * sum) / S(cfg.dim);
  rep.eq1_residual = abs(resid) / (S(1) + sum2);

  Mat<S> m = curvature_center_matrix(cfg);
  Mat<S> g = m.transpose() * q_matrix<S>(cfg.dim) * m;
  for (int i = 0; i < g.rows(); ++i)
    for (int j = 0; j < g.cols(); ++j) {
      S want = (i == j && i > 0) ? S(2) : S{};
      S e = abs(g(i, j) - want);
      if (rep.eq2_residual < e) rep.eq2_residual = e;
    }

  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      auto c = contact(cfg.balls[i], cfg.balls[j], eps);
      if (!c.tangent()) rep.bad_pairs.push_back({i, j, c.cls});
    }
  return rep;
}

namespace detail {

/// m points in R^(m-1), pairwise distance 2, centroid at the origin.  Built
/// by lifting the (m-1)-point simplex and adding an apex below; for m = 3
/// this lands exactly on (1, s), (-1, s), (0, -2s) with s = sqrt(1/3).
template <typename S>
std::vector<VecS<S>> simplex_coords(int m) {
  std::vector<VecS<S>> pts;
  if (m == 1) {
    pts.emplace_back();
    return pts;
  }
  auto prev = simplex_coords<S>(m - 1);
  const S a = ScalarTraits<S>::sqrt(S(2) / S(m * (m - 1)));
  for (auto& p : prev) {
    p.push_back(a);
    pts.push_back(std::move(p));
  }
  VecS<S> apex(m - 1, S{});
  apex[m - 2] = -(S(m - 1) * a);
  pts.push_back(std::move(apex));
  return pts;
}

}  // namespace detail

/// The half-spaces {x1 <= 0} and {x1 >= 2} plus d pairwise tangent unit
/// balls touching both, centered on the hyperplane x1 = 1.
template <typename S>
DescartesConfig<S> canonical_configuration(int d) {
  if (d < 2) throw std::invalid_argument("canonical_configuration: d must be >= 2");
  DescartesConfig<S> cfg;
  cfg.dim = d;
  VecS<S> down(d, S{}), up(d, S{});
  down[0] = S(-1);
  up[0] = S(1);
  cfg.balls.push_back(Ball<S>{BallKind::halfspace, S{}, std::move(down), S(0)});
  cfg.balls.push_back(Ball<S>{BallKind::halfspace, S{}, std::move(up), S(2)});
  for (auto& q : detail::simplex_coords<S>(d)) {
    VecS<S> c(d);
    c[0] = S(1);
    for (int i = 0; i < d - 1; ++i) c[i + 1] = q[i];
    cfg.balls.push_back(make_ball(S(1), std::move(c)));
  }
  return cfg;
}

/// Replaces ball i (0-based position) by the other solution of the Descartes
/// relation: m' = (2/(d-1)) * sum_{j != i} m_j - m_i.  When the new row has
/// zero curvature the ball is a half-space; its offset is pinned by tangency
/// to the retained finite balls, which must agree on it.
template <typename S>
std::pair<DescartesConfig<S>, Ball<S>> replace(const DescartesConfig<S>& cfg, int i,
                                               double eps = default_tolerance()) {
  const int n = cfg.size();
  if (i < 0 || i >= n) throw std::out_of_range("replace: index");
  const int d = cfg.dim;

  VecS<S> sum(d + 1, S{});
  for (int j = 0; j < n; ++j)
    if (j != i) sum = sum + curvature_center(cfg.balls[j]);
  VecS<S> m = (S(2) / S(d - 1)) * sum - curvature_center(cfg.balls[i]);

  Ball<S> fresh;
  if (sign(m[0]) != 0) {
    fresh = ball_from_ccv(m);
  } else {
    VecS<S> normal(m.begin() + 1, m.end());
    if (!near(norm2(normal), S(1), eps))
      throw std::runtime_error("replace: zero-curvature row with non-unit normal");
    bool have = false;
    S offset{};
    for (int j = 0; j < n; ++j) {
      if (j == i || !cfg.balls[j].finite() || sign(cfg.balls[j].curvature) < 0) continue;
      S bj = dot(cfg.balls[j].point, normal) + cfg.balls[j].radius();
      if (!have) {
        offset = bj;
        have = true;
      } else if (!near(offset, bj, 8 * eps)) {
        throw std::runtime_error("replace: retained balls disagree on half-space offset");
      }
    }
    if (!have) throw std::runtime_error("replace: no finite ball pins the half-space offset");
    fresh = Ball<S>{BallKind::halfspace, S{}, std::move(normal), std::move(offset)};
  }

  DescartesConfig<S> out = cfg;
  out.balls[i] = fresh;
  return {std::move(out), std::move(fresh)};
}

/// R_i = I + (2/(d-1)) e_i e^T - (2d/(d-1)) e_i e_i^T, with the group's
/// 1-based letter i in {1, ..., d+2}.  Row i has diagonal -1 and
/// off-diagonal 2/(d-1); all other rows are identity.
template <typename S>
Mat<S> generator_matrix(int d, int letter) {
  if (d < 2) throw std::invalid_argument("generator_matrix: d must be >= 2");
  if (letter < 1 || letter > d + 2) throw std::out_of_range("generator_matrix: letter");
  const int n = d + 2;
  Mat<S> r = Mat<S>::identity(n);
  const S off = S(2) / S(d - 1);
  for (int j = 0; j < n; ++j) r(letter - 1, j) = off;
  r(letter - 1, letter - 1) = S(-1);
  return r;
}

}  // namespace apollo
