#include "apollo/lift.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>

namespace apollo {

namespace {

std::vector<double> to_sphere(const std::vector<double>& p) {
  double n2 = 0;
  for (double x : p) n2 += x * x;
  std::vector<double> out(p.size() + 1);
  out[0] = (n2 - 1) / (n2 + 1);
  for (std::size_t i = 0; i < p.size(); ++i) out[i + 1] = 2 * p[i] / (n2 + 1);
  return out;
}

double vdot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace

SphericalCap project_ball_to_cap(const Ball<double>& b) {
  const int d = b.dim();
  std::vector<double> w(d + 1);
  double rhs;
  std::vector<double> sample(d, 0.0);  // an interior point of the ball
  if (b.finite()) {
    double c2 = 0;
    for (double x : b.point) c2 += x * x;
    const double r = b.radius();
    const double A = (1 - c2 + r * r) / 2;
    w[0] = A;
    for (int i = 0; i < d; ++i) w[i + 1] = -b.point[i];
    rhs = A - 1;
    sample = b.point;
    if (b.curvature < 0) {
      // the complement's interior reaches far away from the center
      sample[0] += 2 * r + 1;
    }
  } else {
    w[0] = b.offset;
    for (int i = 0; i < d; ++i) w[i + 1] = b.point[i];
    rhs = b.offset;
    for (int i = 0; i < d; ++i) sample[i] = (b.offset + 1) * b.point[i];
  }
  double len = std::sqrt(vdot(w, w));
  for (double& x : w) x /= len;
  rhs /= len;

  auto s = to_sphere(sample);
  const double side = vdot(s, w) - rhs;
  if (side == 0) throw std::logic_error("projection: interior sample landed on the boundary");
  const double orient = side > 0 ? 1.0 : -1.0;
  SphericalCap cap;
  cap.center = w;
  for (double& x : cap.center) x *= orient;
  cap.theta = std::acos(std::clamp(orient * rhs, -1.0, 1.0));
  return cap;
}

namespace {

/// A point in a gap next to the tangency point of balls i and j, strictly
/// outside every ball of the packing; nullopt when the offset candidate is
/// inside something.
std::optional<std::vector<double>> gap_point(const Packing<double>& p, int i, int j) {
  auto c = contact(p.balls[i], p.balls[j], p.tolerance);
  if (!c.tangent() || !c.point) return std::nullopt;
  const auto& t = *c.point;
  const int d = p.dim;

  // separation axis at the tangency point, and the gap offset scale
  std::vector<double> axis(d, 0.0);
  double scale = 1.0;
  const Ball<double>* flat = nullptr;
  if (!p.balls[i].finite())
    flat = &p.balls[i];
  else if (!p.balls[j].finite())
    flat = &p.balls[j];
  if (flat) {
    axis = flat->point;
    const Ball<double>& ball = p.balls[i].finite() ? p.balls[i] : p.balls[j];
    scale = ball.radius();
  } else {
    double n2 = 0;
    for (int k = 0; k < d; ++k) {
      axis[k] = p.balls[j].point[k] - p.balls[i].point[k];
      n2 += axis[k] * axis[k];
    }
    if (n2 == 0) return std::nullopt;
    for (double& x : axis) x /= std::sqrt(n2);
    scale = std::min(p.balls[i].radius(), p.balls[j].radius());
  }

  // u: a deterministic unit direction orthogonal to the axis
  std::vector<double> u(d, 0.0);
  for (int k = 0; k < d; ++k) {
    std::vector<double> cand(d, 0.0);
    cand[k] = 1.0;
    double proj = vdot(cand, axis);
    for (int l = 0; l < d; ++l) cand[l] -= proj * axis[l];
    double n2 = vdot(cand, cand);
    if (n2 > 0.25) {
      for (double& x : cand) x /= std::sqrt(n2);
      u = cand;
      break;
    }
  }
  if (vdot(u, u) == 0) return std::nullopt;

  std::vector<double> dir = u;
  if (flat) {
    // tilt slightly out of the half-space
    for (int k = 0; k < d; ++k) dir[k] -= axis[k] / 16.0;
    double n2 = vdot(dir, dir);
    for (double& x : dir) x /= std::sqrt(n2);
  }
  std::vector<double> z(d);
  for (int k = 0; k < d; ++k) z[k] = t[k] + 0.25 * scale * dir[k];

  for (const auto& b : p.balls) {
    if (b.finite()) {
      double d2 = 0;
      for (int k = 0; k < d; ++k) d2 += (z[k] - b.point[k]) * (z[k] - b.point[k]);
      double r = b.radius();
      if (b.curvature > 0 ? d2 <= r * r * (1 + 1e-12) : d2 >= r * r * (1 - 1e-12))
        return std::nullopt;
    } else {
      if (vdot(z, b.point) >= b.offset - 1e-12) return std::nullopt;
    }
  }
  return z;
}

}  // namespace

LiftResult lift_to_caps(const Packing<double>& p) {
  LiftResult out;
  out.caps.reserve(p.balls.size());
  bool big = false;
  for (const auto& b : p.balls) {
    out.caps.push_back(project_ball_to_cap(b));
    if (!(std::cos(out.caps.back().theta) > 1e-12)) big = true;
  }
  if (!big) return out;

  // re-center: invert about a gap point, then scale into the unit ball
  std::optional<std::vector<double>> z;
  for (auto [i, j] : p.graph.edges()) {
    z = gap_point(p, i, j);
    if (z) break;
  }
  if (!z && !p.balls.empty() && p.balls[0].finite()) {
    // no finite tangency: step outside the first ball
    std::vector<double> c = p.balls[0].point;
    c[0] += p.balls[0].radius() * 1.25;
    bool clear = true;
    for (const auto& b : p.balls) {
      if (b.finite()) {
        double d2 = 0;
        for (int k = 0; k < p.dim; ++k) d2 += (c[k] - b.point[k]) * (c[k] - b.point[k]);
        double r = b.radius();
        if (b.curvature > 0 ? d2 <= r * r : d2 >= r * r) clear = false;
      } else if (vdot(c, b.point) >= b.offset) {
        clear = false;
      }
    }
    if (clear) z = c;
  }
  if (!z) throw NormalizationError("lift: no usable gap point for re-centering");
  out.normalized = true;
  out.inversion_center = *z;

  std::vector<Ball<double>> inv;
  inv.reserve(p.balls.size());
  for (const auto& b : p.balls) inv.push_back(invert_in_sphere(b, *z, 1.0));

  // bounding ball, then scale to radius 3/4 around the origin
  std::vector<double> lo(p.dim, 0.0), hi(p.dim, 0.0);
  for (std::size_t bi = 0; bi < inv.size(); ++bi) {
    const auto& b = inv[bi];
    if (!b.finite()) throw NormalizationError("lift: half-space survived the inversion");
    double r = b.radius();
    for (int k = 0; k < p.dim; ++k) {
      lo[k] = bi == 0 ? b.point[k] - r : std::min(lo[k], b.point[k] - r);
      hi[k] = bi == 0 ? b.point[k] + r : std::max(hi[k], b.point[k] + r);
    }
  }
  std::vector<double> mid(p.dim);
  for (int k = 0; k < p.dim; ++k) mid[k] = (lo[k] + hi[k]) / 2;
  double radius = 0;
  for (const auto& b : inv) {
    double d2 = 0;
    for (int k = 0; k < p.dim; ++k) d2 += (b.point[k] - mid[k]) * (b.point[k] - mid[k]);
    radius = std::max(radius, std::sqrt(d2) + b.radius());
  }
  const double s = 0.75 / radius;
  out.caps.clear();
  for (auto& b : inv) {
    VecS<double> c(p.dim);
    for (int k = 0; k < p.dim; ++k) c[k] = (b.point[k] - mid[k]) * s;
    out.caps.push_back(project_ball_to_cap(make_ball(b.curvature / s, std::move(c))));
    if (!(std::cos(out.caps.back().theta) > 0))
      throw NormalizationError("lift: cap at or beyond a hemisphere after re-centering");
  }
  return out;
}

std::vector<double> polar_vertex(const SphericalCap& cap) {
  const double c = std::cos(cap.theta);
  if (!(c > 0)) throw std::domain_error("polar_vertex: angular radius must be below pi/2");
  std::vector<double> v = cap.center;
  for (double& x : v) x /= c;
  return v;
}

EdgeTangencyReport edge_tangency_report(const std::vector<SphericalCap>& caps, const Graph& g,
                                        double eps) {
  if (int(caps.size()) != g.size())
    throw std::invalid_argument("edge_tangency_report: cap/vertex count mismatch");
  std::vector<std::vector<double>> v;
  v.reserve(caps.size());
  for (const auto& c : caps) v.push_back(polar_vertex(c));

  EdgeTangencyReport rep;
  for (int i = 0; i < g.size(); ++i)
    for (int j = i + 1; j < g.size(); ++j) {
      EdgePairCheck pc{i, j, g.adjacent(i, j), 0.0, vdot(v[i], v[j]), false};
      std::vector<double> dir(v[j].size());
      double len2 = 0, a_dot_dir = 0, a2 = vdot(v[i], v[i]);
      for (std::size_t k = 0; k < dir.size(); ++k) {
        dir[k] = v[j][k] - v[i][k];
        len2 += dir[k] * dir[k];
        a_dot_dir += v[i][k] * dir[k];
      }
      double t = len2 > 0 ? std::clamp(-a_dot_dir / len2, 0.0, 1.0) : 0.0;
      pc.min_norm2 = a2 + 2 * t * a_dot_dir + t * t * len2;
      if (pc.edge)
        pc.ok = std::abs(pc.min_norm2 - 1.0) <= eps;
      else
        pc.ok = pc.inner < 1.0 - eps || pc.min_norm2 > 1.0 + eps;
      rep.pairs.push_back(pc);
      if (!pc.ok) rep.violations.push_back(pc);
    }
  return rep;
}

StressSpace stress_space(const std::vector<std::vector<double>>& vertices, const Graph& g,
                         double rank_eps) {
  if (int(vertices.size()) != g.size())
    throw std::invalid_argument("stress_space: vertex count mismatch");
  StressSpace out;
  const auto edges = g.edges();
  const int m = int(edges.size());
  if (m == 0) return out;
  const int dd = int(vertices[0].size());
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(std::int64_t(g.size()) * dd, m);
  for (int e = 0; e < m; ++e) {
    auto [i, j] = edges[e];
    for (int k = 0; k < dd; ++k) {
      a(std::int64_t(i) * dd + k, e) = vertices[j][k] - vertices[i][k];
      a(std::int64_t(j) * dd + k, e) = vertices[i][k] - vertices[j][k];
    }
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(a, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  double smax = sv.size() ? sv(0) : 0.0;
  int rank = 0;
  for (int k = 0; k < sv.size(); ++k)
    if (sv(k) > rank_eps * smax && sv(k) > 0) ++rank;
  out.dimension = m - rank;
  for (int k = rank; k < m; ++k) {
    std::vector<double> basis(m);
    for (int e = 0; e < m; ++e) basis[e] = svd.matrixV()(e, k);
    out.basis.push_back(std::move(basis));
  }
  return out;
}

}  // namespace apollo
